#pragma once

#include <utility>

#include "ratapprox/alpha.hpp"
#include "ratapprox/numeric.hpp"

namespace ratapprox {

/// + means alpha - [q*alpha]/q > 0 (the fraction underestimates alpha),
/// - means it overestimates.
enum class Sign : char { Plus = '+', Minus = '-' };

inline char sign_char(Sign s) { return static_cast<char>(s); }

struct RefineOptions {
  /// Width goal for returned distance enclosures. Refinement continues toward
  /// it after certification while the backing precision allows; certification
  /// itself failing raises precision_exhausted.
  Rat target_width = Rat(1, pow10_z(12));
  /// Hard cap on halving rounds; exceeding it raises precision_exhausted
  /// instead of hanging on an undecidable input.
  int max_rounds = 256;
};

struct NearestResult {
  Int q;
  Int floor_qa;    // greatest integer below q*alpha
  Int nearest_qa;  // the unique integer within 1/2 of q*alpha
  RationalInterval dist;  // encloses ||q*alpha||, strictly inside (0, 1/2)
  Sign sign;       // Plus iff q*alpha > nearest_qa
};

/// Certified m with m < q*alpha < m+1. The enclosure of q*alpha is tightened
/// until it fits inside a unit cell.
Int certify_floor(const AlphaOracle& alpha, const Int& q, const RefineOptions& opts = {});

/// Like certify_floor but for q*alpha - shift (exact integer shift).
Int certify_floor_shifted(const AlphaOracle& alpha, const Int& q, const Int& shift,
                          const RefineOptions& opts = {});

/// The unique integer r with 0 < |q*alpha - r| < 1/2, plus a certified
/// enclosure of the distance and the side q*alpha lies on.
NearestResult certify_nearest(const AlphaOracle& alpha, const Int& q,
                              const RefineOptions& opts = {});

struct NearestFraction {
  Fraction raw;      // [q*alpha] / q exactly as defined
  Fraction reduced;  // same value with gcd divided out
};

/// Best rational approximation of alpha with fixed denominator q.
NearestFraction nearest_fraction(const AlphaOracle& alpha, const Int& q,
                                 const RefineOptions& opts = {});

/// floor of an exact rational.
inline Int floor_rat(const Rat& x) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

}  // namespace ratapprox
