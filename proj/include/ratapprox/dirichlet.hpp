#pragma once

#include <vector>

#include "ratapprox/alpha.hpp"
#include "ratapprox/best_approx.hpp"
#include "ratapprox/numeric.hpp"

namespace ratapprox {

/// Constructive pigeonhole witness: two of the N+1 fractional parts
/// {0}, {alpha}, ..., {N*alpha} share a width-1/N bin, giving q = k - l and
/// p = floor(k*alpha) - floor(l*alpha) with |q*alpha - p| < 1/N.
struct DirichletWitness {
  long n;
  long k;
  long l;  // colliding indices, k > l >= 0
  Int q;   // k - l, 1 <= q <= n
  Int p;
  bool bound_ok;  // certified |q*alpha - p| < 1/n
};

/// Bin assignments use half-open bins [i/N, (i+1)/N); edge ambiguity is
/// resolved by refinement. Returns the first collision in index order.
DirichletWitness pigeonhole_witness(const AlphaOracle& alpha, long n);

/// All q <= n with q*||q*alpha|| certified below 1/2.
std::vector<Int> half_square_census(const AlphaOracle& alpha, long n,
                                    const ScanOptions& opts = {});

struct LegendreReport {
  std::vector<Int> census;             // q with q*||q*alpha|| < 1/2
  std::vector<Fraction> convergents;   // RCF convergents with q <= n
  std::vector<Fraction> violations;    // census reductions missing from them
};

/// Every reduced [q*alpha]/q with q*||q*alpha|| < 1/2 must be an RCF
/// convergent; the report lists violations (none for any irrational).
LegendreReport legendre_check(const AlphaOracle& alpha, long n, const ScanOptions& opts = {});

struct HurwitzRow {
  Int q;
  Int p;
  Sign sign;
  RationalInterval key3;  // q * ||q*alpha||
};

struct HurwitzReport {
  /// rows with 5*(q||q*alpha||)^2 < 1, i.e. q||q*alpha|| < 1/sqrt(5),
  /// decided in exact rational arithmetic
  std::vector<HurwitzRow> below_hurwitz;
  /// the q||q*alpha|| < 1 census in denominator order
  std::vector<HurwitzRow> census_below_one;
  bool all_census_below_half = false;
  /// census split by side, each against denominator order
  bool overestimates_increasing = false;  // sign '-' rows
  bool underestimates_decreasing = false; // sign '+' rows
};

/// The 1/sqrt(5) threshold is applied by squaring: 5 x^2 < 1 on certified
/// rational bounds, never via a floating-point constant.
HurwitzReport hurwitz_scan(const AlphaOracle& alpha, long n, const ScanOptions& opts = {});

}  // namespace ratapprox
