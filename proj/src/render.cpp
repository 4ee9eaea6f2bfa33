#include "ratapprox/render.hpp"

namespace ratapprox {

std::optional<Style> parse_style(std::string_view s) {
  if (s == "pretty") return Style::Pretty;
  if (s == "paper") return Style::Paper;
  return std::nullopt;
}

namespace {

// nearest integer to x with ties to even
Int round_half_even(const Rat& x) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Int twice = 2 * r;
  int cmp = mpz_cmp(twice.get_mpz_t(), x.get_den().get_mpz_t());
  if (cmp > 0) return q + 1;
  if (cmp < 0) return q;
  return mpz_odd_p(q.get_mpz_t()) ? Int(q + 1) : q;
}

// decimal exponent e with 10^(e-1) <= x < 10^e, for x > 0
long decimal_exponent(const Rat& x) {
  long e = 0;
  Rat y = x;
  while (y >= 10) {
    y /= 10;
    ++e;
  }
  while (y < 1) {
    y *= 10;
    --e;
  }
  return e + 1;
}

std::string strip_trailing_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

// digits of |m| left-padded with zeros to at least `width`
std::string zero_padded(const Int& m, size_t width) {
  std::string s = m.get_str();
  if (s.size() < width) s.insert(s.begin(), width - s.size(), '0');
  return s;
}

// positional rendering of x > 0 at n significant digits
std::string positional(const Rat& x, int n) {
  long e = decimal_exponent(x);
  Int m = round_half_even(x * pow10_q(n - e));
  std::string digits = m.get_str();
  if (static_cast<long>(digits.size()) > n) {  // rounding carried: 999.. -> 1000..
    ++e;
    digits.pop_back();
  }
  std::string out;
  if (e <= 0) {
    out = "0.";
    out.append(static_cast<size_t>(-e), '0');
    out += digits;
  } else if (static_cast<long>(digits.size()) <= e) {
    out = digits;
    out.append(static_cast<size_t>(e) - digits.size(), '0');
    return out;  // integer, nothing to strip
  } else {
    out = digits.substr(0, static_cast<size_t>(e)) + "." + digits.substr(static_cast<size_t>(e));
  }
  return strip_trailing_zeros(out);
}

// scientific rendering of x > 0 at n significant digits: d.dd...E[+-]XX
std::string scientific(const Rat& x, int n) {
  long e = decimal_exponent(x);
  Int m = round_half_even(x * pow10_q(n - e));
  std::string digits = m.get_str();
  if (static_cast<long>(digits.size()) > n) {
    ++e;
    digits.pop_back();
  }
  std::string mant = digits.substr(0, 1);
  if (digits.size() > 1) mant += "." + digits.substr(1);
  mant = strip_trailing_zeros(mant);
  long exp10 = e - 1;
  std::string es = std::to_string(exp10 < 0 ? -exp10 : exp10);
  if (es.size() < 2) es.insert(es.begin(), '0');
  return mant + "E" + (exp10 < 0 ? "-" : "+") + es;
}

}  // namespace

std::string render_rational(const Rat& x, Style style, int digits) {
  if (x == 0) return "0";
  if (x < 0) return "-" + render_rational(Rat(-x), style, digits);
  if (style == Style::Pretty) return positional(x, digits);
  // spreadsheet cell: 11-character budget
  if (x >= 1) return positional(x, 9);
  if (x >= Rat(1, 10000)) {
    Int m = round_half_even(x * pow10_q(9));
    if (m == pow10_z(9)) return "1";
    return strip_trailing_zeros("0." + zero_padded(m, 9));
  }
  return scientific(x, 6);
}

std::optional<std::string> render_interval(const RationalInterval& v, Style style, int digits) {
  std::string lo = render_rational(v.lo(), style, digits);
  std::string hi = render_rational(v.hi(), style, digits);
  if (lo == hi) return lo;
  return std::nullopt;
}

std::string render_key(ApproxRecord& rec, KeyChoice choice, const AlphaOracle& alpha, Style style,
                       int digits) {
  for (int round = 0; round < 128; ++round) {
    if (auto s = render_interval(rec.key(choice), style, digits)) return *s;
    rec.tighten(alpha, rec.key2.width() / 4);
  }
  throw precision_exhausted("decimal rendering undecided for q = " + rec.q.get_str(), rec.q);
}

}  // namespace ratapprox
