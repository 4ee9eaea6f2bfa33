#pragma once

#include <string>
#include <vector>

#include "ratapprox/alpha.hpp"
#include "ratapprox/nearest.hpp"
#include "ratapprox/numeric.hpp"

namespace ratapprox {

enum class CFAlgorithm { RCF, NICF };

/// Partial quotient a_k with the sign of the k-th reciprocal (the one written
/// between a_{k-1} and a_k); always +1 for k = 0 and for every RCF term.
struct CFTerm {
  Int a;
  int sign = 1;
};

struct CFExpansion {
  CFAlgorithm algorithm;
  std::vector<CFTerm> quotients;
  std::vector<Fraction> convergents;  // reduced; recurrence-built
};

/// Regular expansion: a_0 = floor(alpha), tail x <- 1/(x - a). Each quotient
/// is a certified floor of the exact tail, maintained as the image of the
/// base enclosure under the accumulated integer Moebius map.
CFExpansion rcf_expand(const AlphaOracle& alpha, long terms);

/// Nearest-integer expansion: a_k = [x_k], x_{k+1} = 1/|x_k - a_k|, with
/// sign_{k+1} = sign(x_k - a_k) attached to the next reciprocal.
CFExpansion nicf_expand(const AlphaOracle& alpha, long terms);

/// p_k = a_k p_{k-1} + sign_k p_{k-2}, q_k likewise, seeded p_{-1}=1, q_{-1}=0.
/// Coprimality of every p_k/q_k is asserted.
std::vector<Fraction> convergents_from(const std::vector<CFTerm>& quotients);

/// `a0; s1 a1, s2 a2, ...` with s in {+, -}.
std::string format_quotients(const CFExpansion& exp);

/// First-kind best approximations with denominator <= n, generated from the
/// RCF convergent/semiconvergent ladder with certified error comparisons.
/// Equals brain_sequence(alpha, n, Kind::First) fraction-for-fraction.
std::vector<Fraction> first_kind_from_cf(const AlphaOracle& alpha, long n);

}  // namespace ratapprox
