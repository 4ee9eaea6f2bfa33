#pragma once

namespace ratapprox::detail {

// Embedded decimal expansions of pi and e. The fractional strings are exact
// truncations: value < constant < value + 10^-(digit count). Verified in
// tests against independent exact-rational series oracles (Machin arctan
// formula for pi, Taylor factorial series for e).
extern const char* const kPiIntPart;
extern const char* const kPiFracDigits;
extern const char* const kEIntPart;
extern const char* const kEFracDigits;

}  // namespace ratapprox::detail
