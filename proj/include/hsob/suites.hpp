#pragma once

// Named verification suites shared by the command-line front end and the
// acceptance runner. Every threshold is a constant in this header.

#include <string>
#include <vector>

#include "hsob/qlambda.hpp"

namespace hsob::suites {

inline constexpr double kKernelTol = 1e-60;
inline constexpr int kKernelMaxN = 30;
inline constexpr double kConstructionTol = 1e-55;
inline constexpr int kConstructionMaxN = 40;
inline constexpr double kExactRingTol = 1e-65;
inline constexpr int kExactRingMaxN = 12;
inline constexpr double kCoeffLimitTol = 0.10;
inline constexpr int kInterlaceMaxDegree = 200;
inline constexpr double kZeroTargetTol = 0.05;
inline constexpr double kSymmetrizeTol = 1e-55;
inline constexpr int kSymmetrizeMaxN = 20;
inline constexpr double kBesselTol = 1e-60;
inline constexpr precision_t kSuiteBits = 256;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  int failures() const;
  bool passed() const { return failures() == 0; }
};

/// (1,0,0), (0,1,0), (1,1,0), (1,1,1), (2,1,1), (0,0,0) as (M0, M1, lambda).
std::vector<TwoByTwoCase> standard_cases();
/// n in {25, 50, 100, 200}.
std::vector<int> standard_n_list();

SuiteResult kernels_oracle();
SuiteResult qlambda_oracle();
SuiteResult exact_ring();
SuiteResult mehler_heine_trends();
SuiteResult coeff_limits();
SuiteResult zero_asymptotics();
SuiteResult symmetrize();
SuiteResult conjecture_probe_r3();
SuiteResult bessel();

/// kernels-oracle, qlambda-oracle, symmetrize, bessel, coeff-limits, and the
/// others by their acceptance names; throws std::invalid_argument otherwise.
SuiteResult run_named(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace hsob::suites
