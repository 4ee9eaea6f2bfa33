#include "ratapprox/nearest.hpp"

#include <optional>

namespace ratapprox {

namespace {

[[noreturn]] void rethrow_with_q(const precision_exhausted& ex, const Int& q) {
  throw precision_exhausted(std::string(ex.what()) + " (while certifying q = " + q.get_str() + ")",
                            q);
}

}  // namespace

Int certify_floor_shifted(const AlphaOracle& alpha, const Int& q, const Int& shift,
                          const RefineOptions& opts) {
  if (q < 1) throw std::invalid_argument("certify_floor: q must be >= 1");
  Rat eps(1, 4);  // width of the q*alpha enclosure, i.e. eps/q for alpha
  for (int round = 0; round < opts.max_rounds; ++round) {
    std::optional<RationalInterval> enc;
    try {
      enc = alpha.scaled_enclosure(q, eps);
    } catch (const precision_exhausted& ex) {
      rethrow_with_q(ex, q);
    }
    RationalInterval shifted = enc->shifted(Rat(-shift));
    Int m = floor_rat(shifted.lo());
    if (shifted.hi() <= Rat(m + 1)) return m;
    eps /= 2;
  }
  throw precision_exhausted("floor of q*alpha undecided after " +
                                std::to_string(opts.max_rounds) + " refinement rounds (q = " +
                                q.get_str() + ")",
                            q);
}

Int certify_floor(const AlphaOracle& alpha, const Int& q, const RefineOptions& opts) {
  return certify_floor_shifted(alpha, q, 0, opts);
}

NearestResult certify_nearest(const AlphaOracle& alpha, const Int& q, const RefineOptions& opts) {
  if (q < 1) throw std::invalid_argument("certify_nearest: q must be >= 1");
  // fast path straight at the width goal; constants with bounded backing
  // digits fall back to the coarse schedule (1/4, halved each round) and
  // return the certified result at the best achievable width
  Rat quarter(1, 4);
  Rat eps = opts.target_width < quarter ? opts.target_width : quarter;
  bool coarse = false;
  Rat half(1, 2);
  std::optional<NearestResult> certified;
  for (int round = 0; round < opts.max_rounds; ++round) {
    std::optional<RationalInterval> enc;
    try {
      enc = alpha.scaled_enclosure(q, eps);
    } catch (const precision_exhausted& ex) {
      if (certified) return *certified;
      if (!coarse && eps < quarter) {
        coarse = true;
        eps = quarter;
        continue;
      }
      rethrow_with_q(ex, q);
    }
    Int m = floor_rat(enc->lo());
    for (const Int& r : {m, Int(m + 1)}) {
      Rat rr(r);
      // (lo, hi) strictly inside (r - 1/2, r + 1/2) and not straddling r
      if (!(rr - half < enc->lo() && enc->hi() < rr + half)) continue;
      if (enc->lo() > rr) {
        certified = NearestResult{q, r, r,
                                  RationalInterval(enc->lo() - rr, enc->hi() - rr), Sign::Plus};
      } else if (enc->hi() < rr) {
        certified = NearestResult{q, Int(r - 1), r,
                                  RationalInterval(rr - enc->hi(), rr - enc->lo()), Sign::Minus};
      }
      break;
    }
    if (certified && certified->dist.width() <= opts.target_width) return *certified;
    eps /= 2;
  }
  if (certified) return *certified;
  throw precision_exhausted("nearest integer to q*alpha undecided after " +
                                std::to_string(opts.max_rounds) + " refinement rounds (q = " +
                                q.get_str() + ")",
                            q);
}

NearestFraction nearest_fraction(const AlphaOracle& alpha, const Int& q,
                                 const RefineOptions& opts) {
  NearestResult r = certify_nearest(alpha, q, opts);
  Fraction raw = Fraction::raw(r.nearest_qa, q);
  return NearestFraction{raw, raw.canonical()};
}

}  // namespace ratapprox
