#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratapprox {

using Int = mpz_class;
using Rat = mpq_class;

/// Requested precision is finer than the backing digit data can certify.
/// Carries the denominator (or expansion step) that could not be resolved.
class precision_exhausted : public std::runtime_error {
 public:
  precision_exhausted(std::string msg, Int q)
      : std::runtime_error(std::move(msg)), q_(std::move(q)) {}
  const Int& q() const noexcept { return q_; }

 private:
  Int q_;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input describes a rational value where an irrational is required
/// (perfect-square radicand, zero surd coefficient).
class rational_value_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int pow10_z(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10u, k);
  return r;
}

inline Rat pow10_q(long k) {
  if (k >= 0) return Rat(pow10_z(static_cast<unsigned long>(k)));
  Rat r(1, pow10_z(static_cast<unsigned long>(-k)));
  r.canonicalize();
  return r;
}

/// Reduced (or deliberately unreduced) integer pair p/q with q >= 1.
struct Fraction {
  Int num;
  Int den;
  bool reduced = false;

  Fraction() : num(0), den(1), reduced(true) {}
  Fraction(Int p, Int q, bool is_reduced) : num(std::move(p)), den(std::move(q)), reduced(is_reduced) {
    if (den < 1) throw std::invalid_argument("Fraction: denominator must be >= 1");
  }

  static Fraction raw(Int p, Int q) { return Fraction(std::move(p), std::move(q), false); }

  static Fraction make_reduced(Int p, Int q) {
    Fraction f(std::move(p), std::move(q), false);
    return f.canonical();
  }

  Fraction canonical() const {
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g == 0) return Fraction(0, 1, true);
    return Fraction(num / g, den / g, true);
  }

  bool is_irreducible() const {
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return g == 1;
  }

  Rat value() const {
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  /// Equality as rational values: p*q' == p'*q.
  bool same_value(const Fraction& other) const { return num * other.den == other.num * den; }

  /// Exact pair equality (distinguishes 710/226 from 355/113).
  bool operator==(const Fraction& other) const { return num == other.num && den == other.den; }

  std::string str() const { return num.get_str() + "/" + den.get_str(); }
};

/// Pair of exact rationals certifying lo < x < hi for the enclosed value x.
class RationalInterval {
 public:
  RationalInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) throw std::invalid_argument("RationalInterval: requires lo < hi");
  }

  const Rat& lo() const noexcept { return lo_; }
  const Rat& hi() const noexcept { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rat& x) const { return lo_ < x && x < hi_; }

  /// Certified value < x (strict, from hi <= x).
  bool entirely_below(const Rat& x) const { return hi_ <= x; }
  /// Certified value > x (strict, from lo >= x).
  bool entirely_above(const Rat& x) const { return lo_ >= x; }

  bool intersects(const RationalInterval& o) const { return lo_ < o.hi_ && o.lo_ < hi_; }

  /// Certified: every value here is strictly below every value in o.
  bool strictly_precedes(const RationalInterval& o) const { return hi_ <= o.lo_; }

  RationalInterval scaled(const Rat& f) const {
    if (f > 0) return RationalInterval(lo_ * f, hi_ * f);
    if (f < 0) return RationalInterval(hi_ * f, lo_ * f);
    throw std::invalid_argument("RationalInterval::scaled: zero factor");
  }

  RationalInterval shifted(const Rat& d) const { return RationalInterval(lo_ + d, hi_ + d); }

  RationalInterval negated() const { return RationalInterval(-hi_, -lo_); }

  /// |value|, valid only when the interval does not straddle zero.
  RationalInterval abs() const {
    if (lo_ >= 0) return *this;
    if (hi_ <= 0) return negated();
    throw std::invalid_argument("RationalInterval::abs: interval straddles zero");
  }

 private:
  Rat lo_;
  Rat hi_;
};

/// Parses a decimal literal like "3.14", "-0.5", "271" into an exact rational,
/// reporting the number of fractional digits supplied.
struct DecimalLiteral {
  Rat value;
  long frac_digits = 0;
};

DecimalLiteral parse_decimal_literal(std::string_view text);

/// Parses "a/b" or a decimal literal into an exact rational.
Rat parse_rational(std::string_view text);

}  // namespace ratapprox
