#pragma once

#include "ternmin/kernels.hpp"

#include <string>
#include <vector>

namespace ternmin {

struct AcceptanceConfig {
  int brute_max_m = 7;          // weight-distribution / CWE / spectrum oracles
  int minimal_brute_max_m = 6;  // pairwise cover scan
  Backend backend = Backend::openmp;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full verification battery, one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

}  // namespace ternmin
