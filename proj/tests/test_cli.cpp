#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "qtforge/qt.hpp"

using njson = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("QTFORGE_CLI");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("compute kappa") {
  auto r = run_cli("compute kappa --k 1 --lambda 2");
  CHECK(r.code == 0);
  auto j = njson::parse(r.out);
  CHECK(j.at("value") == "0");
  r = run_cli("compute kappa --k 1/2 --lambda 2");
  CHECK(njson::parse(r.out).at("value") == "1/2");
}

TEST_CASE("compute kostka-macdonald matches the library JSON") {
  auto r = run_cli("compute kostka-macdonald --lambda 1,1 --mu 2");
  REQUIRE(r.code == 0);
  auto j = njson::parse(r.out);
  CHECK(j.at("value") == njson::parse(qtforge::to_json(qtforge::QTLaurent::q())));
}

TEST_CASE("compute core-quotient") {
  auto r = run_cli("compute core-quotient --mu 4,3,3,1 --r 4");
  REQUIRE(r.code == 0);
  auto j = njson::parse(r.out);
  CHECK(j.at("quotient").size() == 4);
  CHECK((j.at("sign") == 1 || j.at("sign") == -1));
  int total = 0;
  for (auto& v : j.at("core")) total += v.get<int>();
  for (auto& q : j.at("quotient"))
    for (auto& v : q) total += 4 * v.get<int>();
  CHECK(total == 11);
}

TEST_CASE("verify suite: success, unknown name, json and csv formats") {
  auto r = run_cli("verify merge-lemma --n 3");
  CHECK(r.code == 0);
  auto j = njson::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.at(0).at("suite") == "merge-lemma");
  CHECK(j.at(0).at("passed") == true);
  CHECK(j.at(0).at("failures").empty());

  r = run_cli("verify no-such-suite");
  CHECK(r.code == 2);

  r = run_cli("verify gh-lemmas --n 3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("suite,instances,passed,millis,first_failure\n", 0) == 0);
  CHECK(r.out.find("gh-lemmas") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("compute no-such-target").code == 2);
  CHECK(run_cli("compute").code == 2);            // missing required positional
  CHECK(run_cli("").code == 2);                   // missing subcommand
  CHECK(run_cli("compute pnp-char --mu 1,2").code == 2);  // not a partition
  CHECK(run_cli("compute g-poly --k 2/4 --n 2 --lambda 2 --nu 2,2").code == 2);
  CHECK(run_cli("table no-such-table --n 3").code == 2);
  CHECK(run_cli("explore no-such --mu 2").code == 2);
}

TEST_CASE("byte identical output across repeated runs") {
  for (auto args : {"table kostka-macdonald --n 3",
                    "compute chi-r --n 2 --degree 2",
                    "explore degenerations --mu 2,2",
                    "compute pnp-char --mu 3,1"}) {
    auto a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("explore degenerations reports the golden 2x2 graph") {
  auto r = run_cli("explore degenerations --mu 2,2");
  REQUIRE(r.code == 0);
  auto j = njson::parse(r.out);
  CHECK(j.at("nodes").size() == 10);
  CHECK(j.at("connected") == true);
  CHECK(j.at("bond_count") == 4);
}

TEST_CASE("table output is consistent between formats") {
  auto js = run_cli("table kostka-macdonald --n 2");
  auto cs = run_cli("table kostka-macdonald --n 2 --format csv");
  REQUIRE(js.code == 0);
  REQUIRE(cs.code == 0);
  auto j = njson::parse(js.out);
  CHECK(j.size() == 4);  // 2 partitions of 2, full matrix
  CHECK(cs.out.rfind("lambda,mu,kostka\n", 0) == 0);
}
