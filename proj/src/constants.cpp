#include "ratapprox/constants.hpp"

namespace ratapprox::detail {

// 220 certified fractional digits each (truncations, not roundings).
const char* const kPiIntPart = "3";
const char* const kPiFracDigits =
    "1415926535897932384626433832795028841971693993751058209"
    "7494459230781640628620899862803482534211706798214808651"
    "3282306647093844609550582231725359408128481117450284102"
    "7019385211055596446229489549303819644288109756659334461";

const char* const kEIntPart = "2";
const char* const kEFracDigits =
    "7182818284590452353602874713526624977572470936999595749"
    "6696762772407663035354759457138217852516642742746639193"
    "2003059921817413596629043572900334295260595630738132328"
    "6279434907632338298807531952510190115738341879307021540";

}  // namespace ratapprox::detail
