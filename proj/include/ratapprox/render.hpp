#pragma once

#include <optional>
#include <string>

#include "ratapprox/alpha.hpp"
#include "ratapprox/best_approx.hpp"
#include "ratapprox/numeric.hpp"

namespace ratapprox {

enum class Style {
  Pretty,  // positional decimal, configurable significant digits
  Paper,   // spreadsheet cell format: fixed 9 decimals down to 1e-4, then
           // scientific with a 6-digit mantissa; trailing zeros stripped
};

std::optional<Style> parse_style(std::string_view);

/// Deterministic rendering of an exact rational. Rounding is half-even.
std::string render_rational(const Rat& x, Style style, int digits);

/// Renders a certified enclosure; engaged only when both endpoints round to
/// the same string (rounding is monotone, so that string is the value's).
std::optional<std::string> render_interval(const RationalInterval& v, Style style, int digits);

/// Certified rendering of one of a record's sort keys, tightening the record
/// until the digits are determined.
std::string render_key(ApproxRecord& rec, KeyChoice choice, const AlphaOracle& alpha, Style style,
                       int digits);

}  // namespace ratapprox
