// Named identity suites shared by the CLI and the acceptance runner.
#pragma once

#include <string>
#include <vector>

#include "qtforge/characters.hpp"
#include "qtforge/cherednik.hpp"
#include "qtforge/degenerations.hpp"

namespace qtforge {

struct SuiteResult {
  std::string name;
  bool passed = false;
  int instances = 0;
  long long millis = 0;
  std::vector<std::string> failures;  // counterexamples: "instance: lhs != rhs"
};

struct SuiteParams {
  int n = -1;  // cap / override for the main size parameter; -1 = suite default
  int d = -1;  // truncation degree where applicable
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteParams& p = {});

// worker count: QTFORGE_THREADS if set, else hardware concurrency
int thread_budget();

}  // namespace qtforge
