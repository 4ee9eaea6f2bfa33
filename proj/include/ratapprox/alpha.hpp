#pragma once

#include <string>
#include <string_view>

#include "ratapprox/numeric.hpp"

namespace ratapprox {

/// Description of an irrational constant. Validated on construction:
/// a radicand that is a perfect square or a zero surd coefficient would make
/// the value rational and is rejected.
class AlphaSpec {
 public:
  enum class Kind { Pi, E, Sqrt, Quadratic, DecimalDigits };

  static AlphaSpec pi();
  static AlphaSpec e();
  static AlphaSpec phi() { return quadratic(1, 1, 2, 5); }
  static AlphaSpec sqrt(Int d);
  /// (a + b*sqrt(d)) / c with c >= 1, b != 0, d positive and not a square.
  static AlphaSpec quadratic(Int a, Int b, Int c, Int d);
  /// A truncated decimal expansion plus a strict error bound:
  /// |alpha - value(digits)| < error_bound. Never treated as an exact value.
  static AlphaSpec decimal_digits(std::string digits, Rat error_bound);

  Kind kind() const noexcept { return kind_; }

  const Int& quad_a() const noexcept { return a_; }
  const Int& quad_b() const noexcept { return b_; }
  const Int& quad_c() const noexcept { return c_; }
  const Int& quad_d() const noexcept { return d_; }

  const std::string& digits() const noexcept { return digits_; }
  const Rat& error_bound() const noexcept { return bound_; }

  /// -alpha, expressible for Sqrt/Quadratic/DecimalDigits.
  AlphaSpec negated() const;

  /// Canonical spec text (parse_alpha round-trips it).
  std::string str() const;

  bool operator==(const AlphaSpec&) const = default;

 private:
  AlphaSpec() = default;
  Kind kind_ = Kind::Pi;
  Int a_, b_, c_, d_;  // Sqrt/Quadratic
  std::string digits_;
  Rat bound_;
};

/// Grammar: pi | e | phi | sqrt:<d> | quad:<a>,<b>,<c>,<d>
///        | dec:<decimal-literal>[@<error-bound-rational>]
/// Default dec bound: one unit in the last supplied digit place.
AlphaSpec parse_alpha(std::string_view text);

/// Produces certified exact-rational enclosures of alpha and q*alpha at any
/// requested width. Immutable after construction; all operations are pure
/// functions of (spec, arguments) and safe to call concurrently.
class AlphaOracle {
 public:
  explicit AlphaOracle(AlphaSpec spec);

  const AlphaSpec& spec() const noexcept { return spec_; }

  /// Interval with lo < alpha < hi and hi - lo < eps. Pi and e are backed by
  /// embedded digit strings; Sqrt/Quadratic refine without bound via integer
  /// square roots; DecimalDigits is limited by the user-supplied bound.
  RationalInterval enclosure(const Rat& eps) const;

  /// Enclosure of q*alpha of width < eps; endpoints are exactly q times the
  /// endpoints of the underlying enclosure(eps/q).
  RationalInterval scaled_enclosure(const Int& q, const Rat& eps) const;

 private:
  AlphaSpec spec_;
  Rat digit_value_;       // exact rational reading of the backing digit string
  long frac_digits_ = 0;  // certified fractional digits (digit-backed kinds)
};

/// Enclosure of sqrt(d) of width 10^-k, endpoints n/10^k and (n+1)/10^k.
RationalInterval sqrt_enclosure(const Int& d, unsigned long k);

}  // namespace ratapprox
