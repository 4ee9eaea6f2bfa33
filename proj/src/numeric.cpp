#include "ratapprox/numeric.hpp"

#include <cctype>

namespace ratapprox {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

DecimalLiteral parse_decimal_literal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw parse_error("decimal literal has no digits: '" + std::string(text) + "'");
  if (!int_part.empty() && !all_digits(int_part))
    throw parse_error("malformed decimal literal: '" + std::string(text) + "'");
  if (!frac_part.empty() && !all_digits(frac_part))
    throw parse_error("malformed decimal literal: '" + std::string(text) + "'");

  std::string digits;
  digits.reserve(int_part.size() + frac_part.size());
  digits.append(int_part);
  digits.append(frac_part);
  if (digits.empty()) digits = "0";

  Int mantissa(digits, 10);
  DecimalLiteral out;
  out.frac_digits = static_cast<long>(frac_part.size());
  out.value = Rat(mantissa, pow10_z(static_cast<unsigned long>(out.frac_digits)));
  out.value.canonicalize();
  if (negative) out.value = -out.value;
  return out;
}

Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string num(text.substr(0, slash));
    std::string den(text.substr(slash + 1));
    try {
      Rat r(Int(num, 10), Int(den, 10));
      if (r.get_den() == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw parse_error("malformed rational: '" + std::string(text) + "'");
    }
  }
  return parse_decimal_literal(text).value;
}

}  // namespace ratapprox
