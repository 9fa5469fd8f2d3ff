#pragma once

#include <string>
#include <vector>

#include "arbor/coeff.hpp"
#include "arbor/tree.hpp"

namespace arbor {

struct SuiteOptions {
  Flavor flavor = Flavor::Unordered;
  int n = 2;
  bool symbolic = true;
  std::vector<Rational> q1, q2; // used when !symbolic
  int max_degree = 4;
  int kl_k = 0, kl_l = 0; // 0: suite default / full grid

  Params params() const;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string witness;            // first failing instance
  std::vector<std::string> notes; // informational findings

  std::string verdict_line() const;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

} // namespace arbor
