#include "ratapprox/dirichlet.hpp"

#include <map>

#include "ratapprox/continued_fraction.hpp"
#include "ratapprox/nearest.hpp"

namespace ratapprox {

namespace {

constexpr int kMaxRounds = 256;

// floor(n * {k*alpha}) = floor(n*k*alpha - n*floor(k*alpha)), certified.
Int bin_index(const AlphaOracle& alpha, long n, long k) {
  if (k == 0) return 0;  // {0} = 0 sits in the first bin
  Int floor_ka = certify_floor(alpha, k);
  return certify_floor_shifted(alpha, Int(n) * k, Int(n) * floor_ka);
}

}  // namespace

DirichletWitness pigeonhole_witness(const AlphaOracle& alpha, long n) {
  if (n < 1) throw std::invalid_argument("pigeonhole_witness: n must be >= 1");
  std::map<Int, long> first_in_bin;
  for (long k = 0; k <= n; ++k) {
    Int bin = bin_index(alpha, n, k);
    auto [it, inserted] = first_in_bin.emplace(bin, k);
    if (inserted) continue;

    long l = it->second;
    DirichletWitness w;
    w.n = n;
    w.k = k;
    w.l = l;
    w.q = Int(k - l);
    Int floor_k = k == 0 ? Int(0) : certify_floor(alpha, k);
    Int floor_l = l == 0 ? Int(0) : certify_floor(alpha, l);
    w.p = floor_k - floor_l;

    // certify |q*alpha - p| < 1/n (strict; q*alpha - p is irrational)
    Rat bound(1, n);
    Rat eps = bound / 2;
    w.bound_ok = false;
    for (int round = 0; round < kMaxRounds; ++round) {
      RationalInterval enc = alpha.scaled_enclosure(w.q, eps).shifted(Rat(-w.p));
      if (-bound < enc.lo() && enc.hi() < bound) {
        w.bound_ok = true;
        break;
      }
      eps /= 2;
    }
    return w;
  }
  // n+1 parts over n bins: a collision is unconditional
  throw std::logic_error("pigeonhole scan found no collision");
}

std::vector<Int> half_square_census(const AlphaOracle& alpha, long n, const ScanOptions& opts) {
  std::vector<ApproxRecord> records = scan_records(alpha, n, opts);
  std::vector<Int> census;
  Rat half(1, 2);
  for (auto& rec : records) {
    if (key_below(rec, KeyChoice::TimesDen, half, alpha)) census.push_back(rec.q);
  }
  return census;
}

LegendreReport legendre_check(const AlphaOracle& alpha, long n, const ScanOptions& opts) {
  LegendreReport report;
  report.census = half_square_census(alpha, n, opts);

  // RCF convergents with denominator <= n (one extra term decides the cutoff)
  std::vector<Fraction> conv;
  for (long terms = 4;; terms *= 2) {
    CFExpansion exp = rcf_expand(alpha, terms);
    if (exp.convergents.back().den > n || static_cast<long>(exp.convergents.size()) < terms) {
      conv = std::move(exp.convergents);
      break;
    }
  }
  for (const Fraction& f : conv)
    if (f.den <= n) report.convergents.push_back(f);

  for (const Int& q : report.census) {
    Fraction reduced = nearest_fraction(alpha, q).reduced;
    bool found = false;
    for (const Fraction& f : report.convergents)
      if (f.num == reduced.num && f.den == reduced.den) {
        found = true;
        break;
      }
    if (!found) report.violations.push_back(reduced);
  }
  return report;
}

namespace {

// certified 5*v^2 < 1 for the positive value enclosed by rec's key3
bool below_inv_sqrt5(ApproxRecord& rec, const AlphaOracle& alpha) {
  for (int round = 0; round < kMaxRounds; ++round) {
    const RationalInterval& k3 = rec.key3;
    if (5 * k3.hi() * k3.hi() < 1) return true;
    if (5 * k3.lo() * k3.lo() >= 1) return false;
    rec.tighten(alpha, rec.key2.width() / 4);
  }
  throw precision_exhausted("comparison against 1/sqrt(5) undecided for q = " + rec.q.get_str(),
                            rec.q);
}

// certified strict order between two key3 values (distinct for q != q')
bool key3_less(ApproxRecord& a, ApproxRecord& b, const AlphaOracle& alpha) {
  for (int round = 0; round < kMaxRounds; ++round) {
    if (a.key3.strictly_precedes(b.key3)) return true;
    if (b.key3.strictly_precedes(a.key3)) return false;
    a.tighten(alpha, a.key2.width() / 4);
    b.tighten(alpha, b.key2.width() / 4);
  }
  throw precision_exhausted("key3 order undecided between q = " + a.q.get_str() + " and q = " +
                                b.q.get_str(),
                            a.q);
}

}  // namespace

HurwitzReport hurwitz_scan(const AlphaOracle& alpha, long n, const ScanOptions& opts) {
  std::vector<ApproxRecord> records = scan_records(alpha, n, opts);
  HurwitzReport report;
  Rat half(1, 2);

  std::vector<size_t> census_idx;
  for (size_t i = 0; i < records.size(); ++i) {
    if (key_below(records[i], KeyChoice::TimesDen, Rat(1), alpha)) census_idx.push_back(i);
  }

  report.all_census_below_half = true;
  for (size_t i : census_idx) {
    auto& rec = records[i];
    if (!key_below(rec, KeyChoice::TimesDen, half, alpha)) report.all_census_below_half = false;
    report.census_below_one.push_back(HurwitzRow{rec.q, rec.p, rec.sign, rec.key3});
    if (below_inv_sqrt5(rec, alpha))
      report.below_hurwitz.push_back(HurwitzRow{rec.q, rec.p, rec.sign, rec.key3});
  }

  // monotone split in denominator order: overestimates (-) rise toward the
  // limit, underestimates (+) fall toward it
  report.overestimates_increasing = true;
  report.underestimates_decreasing = true;
  std::optional<size_t> prev_minus, prev_plus;
  for (size_t i : census_idx) {
    if (records[i].sign == Sign::Minus) {
      if (prev_minus && !key3_less(records[*prev_minus], records[i], alpha))
        report.overestimates_increasing = false;
      prev_minus = i;
    } else {
      if (prev_plus && !key3_less(records[i], records[*prev_plus], alpha))
        report.underestimates_decreasing = false;
      prev_plus = i;
    }
  }
  return report;
}

}  // namespace ratapprox
