#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sqw {

// One entry of the built-in cross-check battery.
struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;   // worst deviation observed; 0 for structural checks
  double tolerance = 0.0;  // what the residual was compared against
  std::string detail;      // what went wrong; empty on success
};

// Runs the self-check battery: coin and transfer-matrix unitarity, the
// resolvent solver against every hand-resummed closed form in reference.hpp,
// the exact integer-rational output, first-arrival closed forms and their
// cumulative split, the brute-force oracle on random graphs, the three-step
// superposition golden vector, and the trajectory-family census and filters.
//
// Deterministic for a given seed. When tol_override is a positive finite
// number it replaces every check's default tolerance (structural checks,
// which compare exactly, keep a zero residual and are unaffected).
std::vector<CheckResult> run_verification(std::uint64_t seed = 20260819,
                                          double tol_override = 0.0);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sqw
