#include "ratapprox/alpha.hpp"

#include <cstring>
#include <vector>

#include "ratapprox/constants.hpp"

namespace ratapprox {

namespace {

bool is_perfect_square(const Int& n) {
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int parse_int(std::string_view s) {
  if (s.empty()) throw parse_error("empty integer field");
  try {
    return Int(std::string(s), 10);
  } catch (const std::invalid_argument&) {
    throw parse_error("malformed integer: '" + std::string(s) + "'");
  }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

// Smallest k >= 0 with 10^-k < eps, i.e. 10^k > 1/eps.
unsigned long frac_digits_for(const Rat& eps) {
  Rat inv = 1 / eps;
  // head start from the decimal sizes of numerator/denominator; -2 keeps the
  // estimate below the answer (sizeinbase may report one digit too many)
  long num_sz = static_cast<long>(mpz_sizeinbase(inv.get_num().get_mpz_t(), 10));
  long den_sz = static_cast<long>(mpz_sizeinbase(inv.get_den().get_mpz_t(), 10));
  long k = std::max(0L, num_sz - den_sz - 2);
  while (!(Rat(pow10_z(static_cast<unsigned long>(k))) > inv)) ++k;
  return static_cast<unsigned long>(k);
}

}  // namespace

AlphaSpec AlphaSpec::pi() {
  AlphaSpec s;
  s.kind_ = Kind::Pi;
  return s;
}

AlphaSpec AlphaSpec::e() {
  AlphaSpec s;
  s.kind_ = Kind::E;
  return s;
}

AlphaSpec AlphaSpec::sqrt(Int d) {
  if (d < 1) throw parse_error("sqrt: radicand must be a positive integer");
  if (is_perfect_square(d))
    throw rational_value_error("sqrt:" + d.get_str() + " is rational (perfect square)");
  AlphaSpec s;
  s.kind_ = Kind::Sqrt;
  s.a_ = 0;
  s.b_ = 1;
  s.c_ = 1;
  s.d_ = std::move(d);
  return s;
}

AlphaSpec AlphaSpec::quadratic(Int a, Int b, Int c, Int d) {
  if (c < 1) throw parse_error("quad: c must be a positive integer");
  if (d < 1) throw parse_error("quad: d must be a positive integer");
  if (b == 0) throw rational_value_error("quad: b = 0 makes the value rational");
  if (is_perfect_square(d))
    throw rational_value_error("quad: d = " + d.get_str() + " is a perfect square");
  AlphaSpec s;
  s.kind_ = Kind::Quadratic;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.c_ = std::move(c);
  s.d_ = std::move(d);
  return s;
}

AlphaSpec AlphaSpec::decimal_digits(std::string digits, Rat error_bound) {
  if (error_bound <= 0) throw parse_error("dec: error bound must be > 0");
  DecimalLiteral lit = parse_decimal_literal(digits);  // validates the string
  AlphaSpec s;
  s.kind_ = Kind::DecimalDigits;
  s.digits_ = std::move(digits);
  s.bound_ = std::move(error_bound);
  (void)lit;
  return s;
}

AlphaSpec AlphaSpec::negated() const {
  switch (kind_) {
    case Kind::Sqrt:
    case Kind::Quadratic:
      return quadratic(-a_, -b_, c_, d_);
    case Kind::DecimalDigits: {
      std::string neg = digits_;
      if (!neg.empty() && neg.front() == '-')
        neg.erase(neg.begin());
      else
        neg.insert(neg.begin(), '-');
      return decimal_digits(neg, bound_);
    }
    case Kind::Pi:
    case Kind::E:
      throw std::invalid_argument("negated(): " + str() + " has no spec form");
  }
  throw std::logic_error("unreachable");
}

std::string AlphaSpec::str() const {
  switch (kind_) {
    case Kind::Pi:
      return "pi";
    case Kind::E:
      return "e";
    case Kind::Sqrt:
      return "sqrt:" + d_.get_str();
    case Kind::Quadratic:
      return "quad:" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," + d_.get_str();
    case Kind::DecimalDigits:
      return "dec:" + digits_ + "@" + bound_.get_num().get_str() + "/" + bound_.get_den().get_str();
  }
  throw std::logic_error("unreachable");
}

AlphaSpec parse_alpha(std::string_view text) {
  if (text == "pi") return AlphaSpec::pi();
  if (text == "e") return AlphaSpec::e();
  if (text == "phi") return AlphaSpec::phi();
  if (text.rfind("sqrt:", 0) == 0) return AlphaSpec::sqrt(parse_int(text.substr(5)));
  if (text.rfind("quad:", 0) == 0) {
    auto parts = split(text.substr(5), ',');
    if (parts.size() != 4)
      throw parse_error("quad: expected quad:<a>,<b>,<c>,<d>, got '" + std::string(text) + "'");
    return AlphaSpec::quadratic(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                                parse_int(parts[3]));
  }
  if (text.rfind("dec:", 0) == 0) {
    std::string_view body = text.substr(4);
    auto at = body.find('@');
    std::string_view digits = at == std::string_view::npos ? body : body.substr(0, at);
    DecimalLiteral lit = parse_decimal_literal(digits);
    Rat bound = at == std::string_view::npos ? pow10_q(-lit.frac_digits)
                                             : parse_rational(body.substr(at + 1));
    return AlphaSpec::decimal_digits(std::string(digits), bound);
  }
  throw parse_error("unrecognized alpha spec: '" + std::string(text) + "'");
}

RationalInterval sqrt_enclosure(const Int& d, unsigned long k) {
  Int scale = pow10_z(k);
  Int n;
  mpz_sqrt(n.get_mpz_t(), Int(d * scale * scale).get_mpz_t());
  // d is not a perfect square, so n^2 < d*scale^2 < (n+1)^2 strictly
  Rat lo(n, scale);
  Rat hi(n + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  return RationalInterval(lo, hi);
}

AlphaOracle::AlphaOracle(AlphaSpec spec) : spec_(std::move(spec)) {
  switch (spec_.kind()) {
    case AlphaSpec::Kind::Pi: {
      std::string digits = std::string(detail::kPiIntPart) + "." + detail::kPiFracDigits;
      DecimalLiteral lit = parse_decimal_literal(digits);
      digit_value_ = lit.value;
      frac_digits_ = lit.frac_digits;
      break;
    }
    case AlphaSpec::Kind::E: {
      std::string digits = std::string(detail::kEIntPart) + "." + detail::kEFracDigits;
      DecimalLiteral lit = parse_decimal_literal(digits);
      digit_value_ = lit.value;
      frac_digits_ = lit.frac_digits;
      break;
    }
    case AlphaSpec::Kind::DecimalDigits: {
      DecimalLiteral lit = parse_decimal_literal(spec_.digits());
      digit_value_ = lit.value;
      frac_digits_ = lit.frac_digits;
      break;
    }
    case AlphaSpec::Kind::Sqrt:
    case AlphaSpec::Kind::Quadratic:
      break;
  }
}

RationalInterval AlphaOracle::enclosure(const Rat& eps) const {
  if (eps <= 0) throw std::invalid_argument("enclosure: eps must be > 0");
  switch (spec_.kind()) {
    case AlphaSpec::Kind::Pi:
    case AlphaSpec::Kind::E: {
      unsigned long k = frac_digits_for(eps);
      if (k > static_cast<unsigned long>(frac_digits_))
        throw precision_exhausted("embedded digits of " + spec_.str() + " certify only " +
                                      std::to_string(frac_digits_) +
                                      " fractional digits; requested 10^-" + std::to_string(k),
                                  1);
      // truncate to k fractional digits: the backing string is itself a
      // truncation, so lo < alpha < lo + 10^-k strictly
      Int scale = pow10_z(k);
      Int n;
      mpz_fdiv_q(n.get_mpz_t(), Int(digit_value_.get_num() * scale).get_mpz_t(),
                 digit_value_.get_den().get_mpz_t());
      Rat lo(n, scale);
      Rat hi(n + 1, scale);
      lo.canonicalize();
      hi.canonicalize();
      return RationalInterval(lo, hi);
    }
    case AlphaSpec::Kind::DecimalDigits: {
      Rat certified_width = 2 * spec_.error_bound();
      if (!(certified_width < eps))
        throw precision_exhausted("decimal spec '" + spec_.str() + "' certifies width " +
                                      certified_width.get_str() + "; requested width " +
                                      eps.get_str(),
                                  1);
      return RationalInterval(digit_value_ - spec_.error_bound(),
                              digit_value_ + spec_.error_bound());
    }
    case AlphaSpec::Kind::Sqrt:
    case AlphaSpec::Kind::Quadratic: {
      const Int& a = spec_.quad_a();
      const Int& b = spec_.quad_b();
      const Int& c = spec_.quad_c();
      // width of (a + b*s)/c over an s-interval of width w is |b|*w/c
      Rat b_abs(b < 0 ? Int(-b) : b);
      Rat w_target = eps * Rat(c) / b_abs;
      RationalInterval s = sqrt_enclosure(spec_.quad_d(), frac_digits_for(w_target));
      Rat lo = (Rat(a) + Rat(b) * (b > 0 ? s.lo() : s.hi())) / Rat(c);
      Rat hi = (Rat(a) + Rat(b) * (b > 0 ? s.hi() : s.lo())) / Rat(c);
      return RationalInterval(std::move(lo), std::move(hi));
    }
  }
  throw std::logic_error("unreachable");
}

RationalInterval AlphaOracle::scaled_enclosure(const Int& q, const Rat& eps) const {
  if (q < 1) throw std::invalid_argument("scaled_enclosure: q must be >= 1");
  Rat qr(q);
  return enclosure(eps / qr).scaled(qr);
}

}  // namespace ratapprox
