#pragma once

#include <string>
#include <vector>

#include "ratapprox/alpha.hpp"
#include "ratapprox/best_approx.hpp"

namespace ratapprox {

struct CheckResult {
  std::string alpha;
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyOptions {
  long n = 1000;
  ScanOptions scan;
};

/// Cross-module property battery for one constant: kind inclusions,
/// convergents == second-kind sequence, the 1/(2q^2) convergent criterion,
/// Hurwitz census structure, sign alternation, and (for the golden ratio)
/// the Fibonacci identities.
std::vector<CheckResult> verify_alpha(const AlphaOracle& alpha, const std::string& label,
                                      const VerifyOptions& opts);

}  // namespace ratapprox
