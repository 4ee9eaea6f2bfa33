#include "ratapprox/verify.hpp"

#include <sstream>

#include "ratapprox/continued_fraction.hpp"
#include "ratapprox/dirichlet.hpp"
#include "ratapprox/fibonacci.hpp"

namespace ratapprox {

namespace {

std::string fraction_list(const std::vector<Fraction>& fs) {
  std::string out;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += fs[i].str();
  }
  return out;
}

bool is_phi(const AlphaSpec& spec) { return spec == AlphaSpec::phi(); }

bool is_pi(const AlphaSpec& spec) { return spec.kind() == AlphaSpec::Kind::Pi; }

}  // namespace

std::vector<CheckResult> verify_alpha(const AlphaOracle& alpha, const std::string& label,
                                      const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  auto add = [&](std::string name, bool pass, std::string detail) {
    results.push_back(CheckResult{label, std::move(name), pass, std::move(detail)});
  };

  // kind inclusions II <= III <= I
  InclusionReport inc = kind_inclusion_check(alpha, opts.n, opts.scan);
  add("kind-inclusion", inc.ii_in_iii && inc.iii_in_i,
      inc.witnesses.empty() ? (inc.i_equals_ii ? "II in III, III in I; I = II as sets"
                                               : "II in III, III in I")
                            : "violations: " + fraction_list(inc.witnesses));

  // reduced RCF convergents with q <= n equal the kind-II sequence
  BrainSequence two = brain_sequence(alpha, opts.n, Kind::Second, opts.scan);
  std::vector<Fraction> conv;
  for (long terms = 4;; terms *= 2) {
    CFExpansion exp = rcf_expand(alpha, terms);
    if (exp.convergents.back().den > opts.n) {
      for (const Fraction& f : exp.convergents)
        if (f.den <= opts.n) conv.push_back(f);
      break;
    }
  }
  bool conv_eq = conv.size() == two.items.size();
  if (conv_eq) {
    for (size_t i = 0; i < conv.size(); ++i) {
      if (!(conv[i].num == two.items[i].frac.num && conv[i].den == two.items[i].frac.den)) {
        conv_eq = false;
        break;
      }
    }
  }
  {
    std::ostringstream detail;
    detail << conv.size() << " convergents vs " << two.items.size() << " second-kind items";
    add("convergents-equal-kind-II", conv_eq, detail.str());
  }

  // |alpha - p/q| < 1/(2q^2) forces a convergent
  LegendreReport leg = legendre_check(alpha, opts.n, opts.scan);
  add("legendre-criterion", leg.violations.empty(),
      leg.violations.empty()
          ? std::to_string(leg.census.size()) + " census members, all convergents"
          : "violations: " + fraction_list(leg.violations));

  // Hurwitz census structure
  HurwitzReport hw = hurwitz_scan(alpha, opts.n, opts.scan);
  if (is_phi(alpha.spec())) {
    bool structure = hw.all_census_below_half && hw.overestimates_increasing &&
                     hw.underestimates_decreasing;
    // below 1/sqrt(5) = exactly the overestimate half of the census
    size_t minus_rows = 0;
    for (const auto& row : hw.census_below_one)
      if (row.sign == Sign::Minus) ++minus_rows;
    bool split = hw.below_hurwitz.size() == minus_rows;
    for (const auto& row : hw.below_hurwitz)
      if (row.sign != Sign::Minus) split = false;
    std::ostringstream detail;
    detail << hw.census_below_one.size() << " rows below 1, " << hw.below_hurwitz.size()
           << " below 1/sqrt(5); monotone split "
           << (hw.overestimates_increasing && hw.underestimates_decreasing ? "holds" : "broken");
    add("hurwitz-structure", structure && split, detail.str());
  } else {
    bool subset = hw.below_hurwitz.size() <= hw.census_below_one.size();
    add("hurwitz-structure", subset && !hw.census_below_one.empty(),
        std::to_string(hw.census_below_one.size()) + " rows below 1, " +
            std::to_string(hw.below_hurwitz.size()) + " below 1/sqrt(5)");
  }

  // second-kind approximations alternate sides
  bool alternation = true;
  for (size_t i = 1; i < two.items.size(); ++i)
    if (two.items[i].record.sign == two.items[i - 1].record.sign) alternation = false;
  add("kind-II-sign-alternation", alternation,
      std::to_string(two.items.size()) + " items checked");

  if (is_pi(alpha.spec()) && opts.n == 1000) {
    // the first-kind list does NOT alternate: regression on the sign string
    BrainSequence one = brain_sequence(alpha, opts.n, Kind::First, opts.scan);
    std::string signs;
    for (const auto& item : one.items) signs += sign_char(item.record.sign);
    add("kind-I-sign-string", signs == "+----++++++++-", "got \"" + signs + "\"");
  }

  if (is_phi(alpha.spec())) {
    FibSequence fib = fib_via_nearest(90);
    bool additive = true;
    for (size_t i = 2; i < fib.terms.size(); ++i)
      if (fib.terms[i] != fib.terms[i - 1] + fib.terms[i - 2]) additive = false;
    BinetReport binet = binet_round_check(90);
    // consecutive-term ratios are the reduced second-kind approximations
    bool ratios = true;
    for (size_t i = 0; i < two.items.size(); ++i) {
      if (i + 1 >= fib.terms.size()) break;
      if (!(two.items[i].frac.num == fib.terms[i + 1] && two.items[i].frac.den == fib.terms[i]))
        ratios = false;
    }
    add("fibonacci-identities", additive && binet.failures.empty() && ratios,
        "additive recurrence to 90, rounding formula to 90, ratio chain vs kind II");
  }

  return results;
}

}  // namespace ratapprox
