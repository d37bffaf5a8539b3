#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "aol/defect.hpp"

namespace aol {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// "all", "fast", and one suite per criterion (see suite_names()).
const std::vector<std::string>& suite_names();

/// Runs the criteria of a suite in order; `report` sees each result as it
/// completes. Throws ConfigError for an unknown suite.
std::vector<CriterionResult> run_suite(const std::string& name,
                                       const std::function<void(const CriterionResult&)>& report = {});

/// "PASS  3 defect_oracle  <detail>  (0.4 s)"
std::string format_result(const CriterionResult& result);

/// 0 when every result passed, 4 otherwise.
int verify_exit_code(const std::vector<CriterionResult>& results);

/// Seeded n = 8 fields shared by the brute-force defect oracle.
DefectFields oracle_fields();
inline constexpr double kOracleEpsilon = 0.8;
/// Lattice-oracle values of D1..D11 on oracle_fields() at kOracleEpsilon.
const std::array<double, 11>& frozen_oracle_values();

}  // namespace aol
