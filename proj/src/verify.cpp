#include "qtforge/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace qtforge {

int thread_budget() {
  if (const char* env = std::getenv("QTFORGE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

namespace {

struct Instance {
  std::string label;
  std::function<std::string()> run;  // "" on pass, else counterexample text
};

SuiteResult run_instances(const std::string& name, std::vector<Instance> instances) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> results(instances.size());
  std::atomic<size_t> next{0};
  int workers = std::min<int>(thread_budget(), static_cast<int>(instances.size()));
  auto work = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < instances.size();) {
      try {
        results[i] = instances[i].run();
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  if (workers > 1) {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  } else {
    work();
  }
  SuiteResult r;
  r.name = name;
  r.instances = static_cast<int>(instances.size());
  for (size_t i = 0; i < instances.size(); ++i)
    if (!results[i].empty()) r.failures.push_back(instances[i].label + ": " + results[i]);
  r.passed = r.failures.empty();
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  return r;
}

std::string part_str(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string weight_str(const Weight& w) {
  return part_str(Partition(w.begin(), w.end()));
}

std::string eq_check(const QTRational& a, const QTRational& b) {
  if (cross_equal(a, b)) return "";
  return a.str() + " != " + b.str();
}

std::string eq_check(const QTLaurent& a, const QTLaurent& b) {
  if (a == b) return "";
  return a.str() + " != " + b.str();
}

// ---- the individual suites -------------------------------------------------

SuiteResult suite_pnp_examples(const SuiteParams&) {
  std::vector<Instance> inst;
  inst.push_back({"mu=(1)", [] {
                    return eq_check(pnp_character({1}), QTLaurent::one());
                  }});
  inst.push_back({"mu=(2,1)", [] {
                    QTLaurent e;  // qt + 2q + 2t + 1
                    e.add_term({2, 2}, 1);
                    e.add_term({2, 0}, 2);
                    e.add_term({0, 2}, 2);
                    e.add_term({0, 0}, 1);
                    return eq_check(pnp_character({2, 1}), e);
                  }});
  inst.push_back({"mu=(3,1)", [] {
                    QTLaurent e;  // q^3 t + 3q^3 + 3q^2 t + 5q^2 + 5qt + 3q + 3t + 1
                    e.add_term({6, 2}, 1);
                    e.add_term({6, 0}, 3);
                    e.add_term({4, 2}, 3);
                    e.add_term({4, 0}, 5);
                    e.add_term({2, 2}, 5);
                    e.add_term({2, 0}, 3);
                    e.add_term({0, 2}, 3);
                    e.add_term({0, 0}, 1);
                    return eq_check(pnp_character({3, 1}), e);
                  }});
  return run_instances("pnp-examples", std::move(inst));
}

SuiteResult suite_gh_equivalence(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 6;
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n)
    for (auto& mu : partitions_of(n))
      inst.push_back({"mu=" + part_str(mu), [mu] {
                        if (!gh_equivalence_per_tableau(mu)) return std::string("per-tableau mismatch");
                        return eq_check(pnp_character(mu), garsia_haiman_character(mu));
                      }});
  return run_instances("gh-equivalence", std::move(inst));
}

SuiteResult suite_regular_rep(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 7;
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n)
    for (auto& mu : partitions_of(n))
      inst.push_back({"mu=" + part_str(mu), [mu, n] {
                        Rat v = pnp_character(mu).eval(1, 1);
                        Rat fact = 1;
                        for (int i = 2; i <= n; ++i) fact *= i;
                        if (v == fact) return std::string();
                        return v.get_str() + " != " + fact.get_str();
                      }});
  return run_instances("regular-rep", std::move(inst));
}

SuiteResult suite_chi_r_crosscheck(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 3;
  int D = p.d > 0 ? p.d : 4;
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n)
    inst.push_back({"n=" + std::to_string(n) + ",D=" + std::to_string(D), [n, D] {
                      TCharacterSeries a = chi_R_thm(n, D);
                      TCharacterSeries b = chi_R_atiyah_bott(n, D);
                      if (tcharacter_equal_window(a, b)) return std::string();
                      return std::string("series differ on the certified window");
                    }});
  return run_instances("chi-r-crosscheck", std::move(inst));
}

SuiteResult suite_macdonald_table(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 5;
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n)
    for (auto& mu : partitions_of(n))
      inst.push_back({"mu=" + part_str(mu), [mu, n]() -> std::string {
        const SchurExpansion& h = modified_macdonald(mu);
        for (auto& lam : partitions_of(n)) {
          QTLaurent kt = kostka_modified(lam, mu);
          auto it = h.coeffs.find(lam);
          if (it != h.coeffs.end() && !it->second.is_polynomial())
            return "K~_" + part_str(lam) + " not a polynomial";
          for (auto& [e, c] : kt.terms)
            if (e.q2 < 0 || e.t2 < 0 || e.q2 % 2 || e.t2 % 2 || c < 0 || c.get_den() != 1)
              return "K~_" + part_str(lam) + " = " + kt.str() + " not in N[q,t]";
          if (lam == Partition{n} && kt != QTLaurent::one())
            return "K~_{(n)," + part_str(mu) + "} = " + kt.str() + " != 1";
          if (kt.eval(1, 1) != Rat(static_cast<long>(syt_enumerate(lam).size())))
            return "K~_" + part_str(lam) + "(1,1) != |SYT|";
        }
        // principal specialization: H~_mu[Z; q, 1/q] = q^{-n(mu)} H_mu(q) s_mu[Z/(1-q)]
        SchurExpansion rhs = pleth_scale(SchurExpansion::single(mu), PlethMode::DivOneMinusT);
        QTRational scale(QTLaurent::monomial(1, -2 * static_cast<int>(n_stat(mu)), 0) *
                         hook_poly(mu, 'q'));
        for (auto& lam : partitions_of(n)) {
          QTLaurent lhs = kostka_modified(lam, mu).subst(QTLaurent::q(), QTLaurent::q(-2));
          QTRational r;
          auto it = rhs.coeffs.find(lam);
          if (it != rhs.coeffs.end())
            r = it->second.subst(QTLaurent::q(), QTLaurent::q()) * scale;  // t -> q
          std::string err = eq_check(QTRational(lhs), r);
          if (!err.empty()) return "principal specialization at " + part_str(lam) + ": " + err;
        }
        return "";
      }});
  return run_instances("macdonald-table", std::move(inst));
}

std::vector<Partition> subpartitions_of(const Partition& box) {
  std::vector<Partition> out;
  for (auto& s : subdiagrams(box)) out.push_back(s);
  return out;
}

SuiteResult suite_thm_identities(const SuiteParams& p) {
  std::vector<Instance> inst;
  // identity 2: K_{mu*,0}(t) = Phi_mu[(1-t^n)/(1-t)], mu inside (2,2), n in {3,4}
  for (int n : {3, 4}) {
    if (p.n > 0 && n > p.n) continue;
    for (auto& mu : subpartitions_of({2, 2})) {
      if (static_cast<int>(normalized(mu).size()) >= n) continue;
      inst.push_back({"id2 n=" + std::to_string(n) + " mu=" + part_str(mu), [mu, n] {
                        QTLaurent lhs = lusztig_t_analog(star(normalized(mu), n), Weight(n, 0), n);
                        QTLaurent alphabet;
                        for (int i = 0; i < n; ++i) alphabet += QTLaurent::t(2 * i);
                        return eq_check(QTRational(lhs),
                                        plethysm_alphabet(phi_schur(normalized(mu)), alphabet));
                      }});
    }
  }
  // identity 1: n in {2,3}, all lam |- n, mu inside (2)
  for (int n : {2, 3}) {
    if (p.n > 0 && n > p.n) continue;
    for (auto& lam : partitions_of(n))
      for (auto& mu : subpartitions_of({2})) {
        if (static_cast<int>(normalized(mu).size()) >= n) continue;
        inst.push_back({"id1 n=" + std::to_string(n) + " lam=" + part_str(lam) +
                            " mu=" + part_str(mu),
                        [mu, lam, n] {
                          auto [id1, id2] = thm_identities_check(n, mu, lam);
                          (void)id2;
                          return id1 ? std::string() : std::string("identity 1 fails");
                        }});
      }
  }
  return run_instances("thm-identities", std::move(inst));
}

SuiteResult suite_hesselink(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 3;
  int cap = p.d > 0 ? p.d : 4;  // bound on the positive part of mu
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n) {
    // dominant weights with coordinate sum 0 and positive part <= cap
    std::vector<Weight> mus;
    Weight w(n);
    auto rec = [&](auto&& self, int i, int hi) -> void {
      if (i == n) {
        if (weight_sum(w) == 0) mus.push_back(w);
        return;
      }
      for (int v = -cap * n; v <= hi; ++v) {
        w[i] = v;
        int pos = 0;
        for (int j = 0; j <= i; ++j) pos += std::max(w[j], 0);
        if (pos > cap) continue;
        self(self, i + 1, v);
      }
    };
    rec(rec, 0, cap);
    for (auto& mu : mus)
      inst.push_back({"n=" + std::to_string(n) + " mu=" + weight_str(mu), [mu, n] {
                        QTRational lhs = curly_g(Partition(n, 1), dagger(mu), n);
                        QTLaurent den = QTLaurent::one();
                        for (int i = 1; i <= n; ++i) den *= QTLaurent::one() - QTLaurent::t(2 * i);
                        QTRational rhs(QTLaurent::monomial(1, 0, n * n) *
                                           lusztig_t_analog(mu, Weight(n, 0), n),
                                       den);
                        return eq_check(lhs, rhs);
                      }});
  }
  return run_instances("hesselink", std::move(inst));
}

SuiteResult suite_fake_degree(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 5;
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n)
    for (auto& lam : partitions_of(n))
      inst.push_back({"lam=" + part_str(lam), [lam, n] {
                        // q^{n(lam)} H_lam(q)^{-1} = Molien multiplicity of chi_lam in C[t]
                        QTRational lhs(QTLaurent::monomial(1, 2 * static_cast<int>(n_stat(lam)), 0),
                                       hook_poly(lam, 'q'));
                        return eq_check(lhs, delta_bracket(lam, Partition{n}, 'q'));
                      }});
  return run_instances("fake-degree", std::move(inst));
}

SuiteResult suite_gordon(const SuiteParams& p) {
  int M = p.n > 0 ? p.n : 5;
  std::vector<Instance> inst;
  for (int m = 1; m <= M; ++m)
    for (int l = 1; l <= 5; ++l) {
      if (std::gcd(l, m) != 1) continue;
      for (auto& mu : partitions_of(m))
        inst.push_back({"l=" + std::to_string(l) + " m=" + std::to_string(m) +
                            " mu=" + part_str(mu),
                        [l, m, mu] {
                          QTRational lhs = g_poly(l, m, 1, {1}, mu);
                          QTLaurent alphabet;  // (1-t^l)/(1-t)
                          for (int i = 0; i < l; ++i) alphabet += QTLaurent::t(2 * i);
                          QTRational rhs =
                              QTRational(QTLaurent::monomial(1, 0, m + l - m * l),
                                         QTLaurent::one() - QTLaurent::t(2 * l)) *
                              plethysm_alphabet(SchurExpansion::single(mu), alphabet);
                          return eq_check(lhs, rhs);
                        }});
    }
  return run_instances("gordon", std::move(inst));
}

SuiteResult suite_phinil_specialization(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 4;
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n)
    for (auto& lam : partitions_of(n))
      for (auto& mu : subpartitions_of({2, 2})) {
        if (static_cast<int>(normalized(mu).size()) >= n) continue;
        inst.push_back({"n=" + std::to_string(n) + " lam=" + part_str(lam) +
                            " mu=" + part_str(mu),
                        [lam, mu, n]() -> std::string {
                          // eq with t -> 1/q substituted termwise (each hook factor
                          // stays nonzero there)
                          SchurExpansion phimu = phi_schur(normalized(mu));
                          QTRational lhs;
                          for (auto& nu : partitions_of(n)) {
                            if (!dominance_le(nu, lam)) continue;
                            QTLaurent k = k_coeff(lam, nu).subst(QTLaurent::q(), QTLaurent::q(-2));
                            if (k.is_zero()) continue;
                            QTLaurent bnu = b_poly(nu).subst(QTLaurent::q(), QTLaurent::q(-2));
                            QTRational pl = plethysm_alphabet(phimu, bnu);
                            QTRational hooks = hook_product_factored(nu).to_rational().subst(
                                QTLaurent::q(), QTLaurent::q(-2));
                            lhs += pl * QTRational(k) / hooks;
                          }
                          return eq_check(lhs, rnil_specialized(mu, lam));
                        }});
      }
  return run_instances("phinil-specialization", std::move(inst));
}

ZWeightCombo normalize_combo(const ZWeightCombo& c) {
  ZWeightCombo out;
  for (auto& [w, v] : c) {
    if (v == 0) continue;
    Weight k = w;
    while (!k.empty() && k.back() == 0) k.pop_back();
    out[k] += v;
    if (out[k] == 0) out.erase(k);
  }
  return out;
}

SuiteResult suite_combinatorial_identities(const SuiteParams&) {
  std::vector<Instance> inst;
  // phi/psi mutually inverse on the downset of (4,4,4)
  for (auto& lam : subpartitions_of({4, 4, 4}))
    inst.push_back({"phipsi lam=" + part_str(lam), [lam]() -> std::string {
                      for (bool psifirst : {true, false}) {
                        ZWeightCombo first = psifirst ? psi(lam) : phi(lam);
                        ZWeightCombo acc;
                        for (auto& [w, c] : first) {
                          Partition m = normalized(Partition(w.begin(), w.end()));
                          for (auto& [w2, c2] : (psifirst ? phi(m) : psi(m))) {
                            Weight k = w2;
                            acc[k] += c * c2;
                          }
                        }
                        acc = normalize_combo(acc);
                        ZWeightCombo expect;
                        expect[normalized(lam)] = 1;
                        if (acc != normalize_combo(expect)) return "composition is not identity";
                      }
                      return "";
                    }});
  // {-w0(eta) | eta in E(mu,|mu|)} = {phi* | mu/phi a horizontal strip}
  for (int n : {3, 4})
    for (auto& mu : subpartitions_of({3, 3}))
      inst.push_back({"starE n=" + std::to_string(n) + " mu=" + part_str(mu),
                      [mu, n]() -> std::string {
                        Partition m = normalized(mu);
                        Weight w(n, 0);
                        for (size_t i = 0; i < m.size(); ++i) w[i] = m[i];
                        std::set<Weight> lhs;
                        for (auto& eta : inverse_pieri_set(w, part_size(m))) {
                          Weight neg(eta.rbegin(), eta.rend());
                          for (int& x : neg) x = -x;
                          lhs.insert(neg);
                        }
                        std::set<Weight> rhs;
                        Partition padded = m;
                        padded.push_back(0);
                        std::function<void(size_t, Partition&)> rec = [&](size_t i, Partition& phi_acc) {
                          if (i == m.size()) {
                            rhs.insert(star(normalized(phi_acc), n));
                            return;
                          }
                          for (int v = padded[i + 1]; v <= padded[i]; ++v) {
                            phi_acc.push_back(v);
                            rec(i + 1, phi_acc);
                            phi_acc.pop_back();
                          }
                        };
                        Partition acc;
                        rec(0, acc);
                        if (lhs != rhs) return "sets differ";
                        return "";
                      }});
  // pleth_scale round trip through degree 5
  for (int d = 1; d <= 5; ++d)
    for (auto& lam : partitions_of(d))
      inst.push_back({"pleth lam=" + part_str(lam), [lam]() -> std::string {
                        SchurExpansion s = SchurExpansion::single(lam);
                        for (bool divfirst : {true, false}) {
                          SchurExpansion a = pleth_scale(
                              pleth_scale(s, divfirst ? PlethMode::DivOneMinusT
                                                      : PlethMode::TimesOneMinusT),
                              divfirst ? PlethMode::TimesOneMinusT : PlethMode::DivOneMinusT);
                          if (!(a.coeffs == s.coeffs)) return "round trip failed";
                        }
                        return "";
                      }});
  return run_instances("combinatorial-identities", std::move(inst));
}

SuiteResult suite_gh_lemmas(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 8;
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n)
    for (auto& nu : partitions_of(n))
      inst.push_back({"nu=" + part_str(nu), [nu]() -> std::string {
                        GHLemmaResult r = gh_lemma_checks(nu);
                        if (!r.gh1) return "lemma GH1 fails";
                        if (!r.gh2) return "lemma GH2 fails";
                        if (!r.gh3) return "lemma GH3 fails";
                        return "";
                      }});
  return run_instances("gh-lemmas", std::move(inst));
}

SuiteResult suite_merge_lemma(const SuiteParams& p) {
  int N = p.n > 0 ? p.n : 5;
  std::vector<Instance> inst;
  for (int n = 1; n <= N; ++n)
    for (auto& mu : partitions_of(n))
      inst.push_back({"mu=" + part_str(mu), [mu]() -> std::string {
                        for (auto& c : admissible_configs(normalized(mu))) {
                          if (pieces(c).size() == 1) continue;
                          if (merge_moves(c).empty()) return "admissible configuration with no merge move";
                        }
                        if (!degeneration_connected(mu)) return "merge graph not connected";
                        return "";
                      }});
  return run_instances("merge-lemma", std::move(inst));
}

using SuiteFn = SuiteResult (*)(const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"pnp-examples", suite_pnp_examples},
      {"gh-equivalence", suite_gh_equivalence},
      {"regular-rep", suite_regular_rep},
      {"chi-r-crosscheck", suite_chi_r_crosscheck},
      {"macdonald-table", suite_macdonald_table},
      {"thm-identities", suite_thm_identities},
      {"hesselink", suite_hesselink},
      {"fake-degree", suite_fake_degree},
      {"gordon", suite_gordon},
      {"phinil-specialization", suite_phinil_specialization},
      {"combinatorial-identities", suite_combinatorial_identities},
      {"gh-lemmas", suite_gh_lemmas},
      {"merge-lemma", suite_merge_lemma},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteParams& p) {
  for (auto& [n, fn] : registry())
    if (n == name) return fn(p);
  throw std::domain_error("unknown suite: " + name);
}

}  // namespace qtforge
