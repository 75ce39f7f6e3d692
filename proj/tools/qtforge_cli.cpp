// qtforge command line: compute exact quantities, run identity suites,
// export tables, explore degeneration graphs.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtforge/verify.hpp"

using njson = nlohmann::ordered_json;
using namespace qtforge;

namespace {

Partition parse_partition(const std::string& s) {
  Partition p;
  if (s.empty() || s == "0") return p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
  return p;
}

std::pair<long, long> parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return {std::stol(s), 1};
  return {std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1))};
}

njson laurent_json(const QTLaurent& f) { return njson::parse(to_json(f)); }
njson rational_json(const QTRational& f) { return njson::parse(to_json(f)); }

std::string fmt_partition(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

int cmd_compute(const std::string& target, const std::string& mu_s, const std::string& lam_s,
                const std::string& nu_s, const std::string& k_s, int n, int degree, int r,
                bool tilde) {
  njson out;
  if (target == "pnp-char") {
    out["mu"] = fmt_partition(parse_partition(mu_s));
    out["terms"] = laurent_json(pnp_character(parse_partition(mu_s)));
  } else if (target == "gh-char") {
    out["mu"] = fmt_partition(parse_partition(mu_s));
    out["terms"] = laurent_json(garsia_haiman_character(parse_partition(mu_s)));
  } else if (target == "b-coeff") {
    out["value"] = rational_json(b_coeff(parse_partition(mu_s), parse_partition(lam_s)));
  } else if (target == "chi-r") {
    TCharacterSeries s = chi_R_thm(n, degree);
    out["n"] = n;
    out["bound"] = s.bound;
    njson coeffs = njson::array();
    for (auto& [w, series] : s.coeffs) {
      njson e;
      e["z"] = w;
      e["series"] = laurent_json(series.terms);
      coeffs.push_back(e);
    }
    out["coeffs"] = coeffs;
  } else if (target == "g-poly") {
    auto [l, rr] = parse_rational(k_s);
    out["value"] = rational_json(g_poly(l, rr, n, parse_partition(lam_s), parse_partition(nu_s)));
  } else if (target == "kostka-macdonald") {
    out["value"] = laurent_json(kostka_modified(parse_partition(lam_s), parse_partition(mu_s)));
  } else if (target == "degen-mac") {
    Partition lp = parse_partition(lam_s);
    Weight lam(lp.begin(), lp.end());
    lam.resize(n, 0);
    njson terms = njson::array();
    for (auto& [w, c] : degen_macdonald(lam, n, tilde)) {
      njson e;
      e["weight"] = w;
      e["coeff"] = laurent_json(c);
      terms.push_back(e);
    }
    out["terms"] = terms;
  } else if (target == "rnil") {
    out["value"] = rational_json(rnil_isotypic(parse_partition(mu_s), parse_partition(lam_s)));
    out["specialized"] =
        rational_json(rnil_specialized(parse_partition(mu_s), parse_partition(lam_s)));
  } else if (target == "kappa") {
    auto [l, rr] = parse_rational(k_s);
    out["value"] = kappa(Rat(l, rr), parse_partition(lam_s)).get_str();
  } else if (target == "core-quotient") {
    CoreQuotient cq = r_core_quotient_sign(parse_partition(mu_s), r);
    out["core"] = cq.core;
    njson quo = njson::array();
    for (auto& q : cq.quo) quo.push_back(q);
    out["quotient"] = quo;
    out["sign"] = cq.sign;
  } else {
    std::cerr << "unknown compute target: " << target << "\n";
    return 2;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& name, int n, int d, const std::string& format) {
  SuiteParams p;
  p.n = n;
  p.d = d;
  std::vector<SuiteResult> results;
  if (name == "all") {
    for (auto& s : suite_names()) results.push_back(run_suite(s, p));
  } else {
    results.push_back(run_suite(name, p));
  }
  bool ok = true;
  if (format == "csv") {
    std::cout << "suite,instances,passed,millis,first_failure\n";
    for (auto& r : results) {
      std::cout << r.name << "," << r.instances << "," << (r.passed ? "true" : "false") << ","
                << r.millis << ",\"" << (r.failures.empty() ? "" : r.failures.front()) << "\"\n";
      ok = ok && r.passed;
    }
  } else {
    njson arr = njson::array();
    for (auto& r : results) {
      njson j;
      j["suite"] = r.name;
      j["instances"] = r.instances;
      j["passed"] = r.passed;
      j["millis"] = r.millis;
      j["failures"] = r.failures;
      arr.push_back(j);
      ok = ok && r.passed;
    }
    std::cout << arr.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_table(const std::string& target, int n, const std::string& format) {
  if (target != "kostka-macdonald") {
    std::cerr << "unknown table target: " << target << "\n";
    return 2;
  }
  auto parts = partitions_of(n);
  if (format == "csv") {
    std::cout << "lambda,mu,kostka\n";
    for (auto& lam : parts)
      for (auto& mu : parts)
        std::cout << "\"" << fmt_partition(lam) << "\",\"" << fmt_partition(mu) << "\",\""
                  << kostka_modified(lam, mu).str() << "\"\n";
  } else {
    njson arr = njson::array();
    for (auto& lam : parts)
      for (auto& mu : parts) {
        njson e;
        e["lambda"] = fmt_partition(lam);
        e["mu"] = fmt_partition(mu);
        e["value"] = laurent_json(kostka_modified(lam, mu));
        arr.push_back(e);
      }
    std::cout << arr.dump(2) << "\n";
  }
  return 0;
}

int cmd_explore(const std::string& mu_s, const std::string& graph_path) {
  Partition mu = normalized(parse_partition(mu_s));
  auto bonds = all_bonds(mu);
  auto configs = admissible_configs(mu);
  auto mask_of = [&](const CutConfig& c) {
    unsigned long m = 0;
    for (size_t i = 0; i < bonds.size(); ++i)
      if (c.bonds.count(bonds[i])) m |= 1ul << i;
    return m;
  };
  njson out;
  out["mu"] = fmt_partition(mu);
  out["bond_count"] = bonds.size();
  njson nodes = njson::array();
  njson edges = njson::array();
  for (auto& c : configs) {
    njson nd;
    nd["mask"] = mask_of(c);
    nd["pieces"] = pieces(c).size();
    nodes.push_back(nd);
    if (pieces(c).size() > 1)
      for (auto& nxt : merge_moves(c)) {
        njson e;
        e["from"] = mask_of(c);
        e["to"] = mask_of(nxt);
        edges.push_back(e);
      }
  }
  out["nodes"] = nodes;
  out["edges"] = edges;
  out["connected"] = degeneration_connected(mu);
  if (!graph_path.empty()) {
    std::ofstream f(graph_path);
    f << out.dump(2) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character combinatorics: Macdonald polynomials, nilpotent-pair "
               "characters, Cherednik G-polynomials"};
  app.require_subcommand(1);

  std::string mu_s, lam_s, nu_s, k_s = "1", target, suite, format = "json", graph_path;
  int n = 2, degree = 4, r = 2, vn = -1, vd = -1;
  bool tilde = false;

  auto* compute = app.add_subcommand("compute", "compute one quantity, JSON to stdout");
  compute->add_option("target", target, "one of pnp-char gh-char b-coeff chi-r g-poly "
                                        "kostka-macdonald degen-mac rnil kappa core-quotient")
      ->required();
  compute->add_option("--mu", mu_s, "partition, comma separated");
  compute->add_option("--lambda", lam_s, "partition, comma separated");
  compute->add_option("--nu", nu_s, "partition, comma separated");
  compute->add_option("--k", k_s, "rational l/r");
  compute->add_option("--n", n, "rank / number of variables");
  compute->add_option("--degree", degree, "series truncation degree");
  compute->add_option("--r", r, "core/quotient parameter");
  compute->add_flag("--tilde", tilde, "tilde variant of degen-mac");

  auto* verify = app.add_subcommand("verify", "run a named identity suite");
  verify->add_option("suite", suite, "suite name or 'all'");
  verify->add_option("--name", suite, "suite name or 'all'");
  verify->add_option("--n", vn, "size cap override");
  verify->add_option("--d", vd, "degree/window override");
  verify->add_option("--format", format, "json or csv");

  auto* table = app.add_subcommand("table", "emit a full table");
  table->add_option("target", target, "kostka-macdonald")->required();
  table->add_option("--n", n, "partition size")->required();
  table->add_option("--format", format, "json or csv");

  auto* explore = app.add_subcommand("explore", "explore degeneration graphs");
  explore->add_option("target", target, "degenerations")->required();
  explore->add_option("--mu", mu_s, "partition, comma separated")->required();
  explore->add_option("--emit-graph", graph_path, "write graph JSON to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(target, mu_s, lam_s, nu_s, k_s, n, degree, r, tilde);
    if (verify->parsed()) {
      if (suite.empty()) {
        std::cerr << "verify: missing suite name\n";
        return 2;
      }
      const auto names = suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      return cmd_verify(suite, vn, vd, format);
    }
    if (table->parsed()) return cmd_table(target, n, format);
    if (explore->parsed()) {
      if (target != "degenerations") {
        std::cerr << "unknown explore target: " << target << "\n";
        return 2;
      }
      return cmd_explore(mu_s, graph_path);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
