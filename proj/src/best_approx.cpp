#include "ratapprox/best_approx.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

namespace ratapprox {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::First: return "I";
    case Kind::Second: return "II";
    case Kind::Third: return "III";
  }
  throw std::logic_error("unreachable");
}

std::optional<Kind> parse_kind(std::string_view s) {
  if (s == "I" || s == "i" || s == "1") return Kind::First;
  if (s == "II" || s == "ii" || s == "2") return Kind::Second;
  if (s == "III" || s == "iii" || s == "3") return Kind::Third;
  return std::nullopt;
}

ApproxRecord ApproxRecord::from_nearest(const NearestResult& n) {
  Rat qr(n.q);
  return ApproxRecord{n.q,
                      n.nearest_qa,
                      n.sign,
                      n.dist.scaled(1 / qr),
                      n.dist,
                      n.dist.scaled(qr),
                      Fraction::raw(n.nearest_qa, n.q).is_irreducible()};
}

void ApproxRecord::tighten(const AlphaOracle& alpha, const Rat& width) {
  if (key2.width() <= width) return;
  RefineOptions opts;
  opts.target_width = width;
  *this = from_nearest(certify_nearest(alpha, q, opts));
}

std::vector<ApproxRecord> scan_records(const AlphaOracle& alpha, long n,
                                       const ScanOptions& opts) {
  if (n < 1) throw std::invalid_argument("scan_records: n must be >= 1");
  std::vector<std::optional<ApproxRecord>> slots(static_cast<size_t>(n));
  int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(n)));

  auto work = [&](long lo, long hi) {
    // [lo, hi) slice; exceptions surface when unwrapping the slots
    for (long q = lo; q < hi; ++q) {
      try {
        slots[static_cast<size_t>(q - 1)] =
            ApproxRecord::from_nearest(certify_nearest(alpha, q, opts.refine));
      } catch (...) {
        break;
      }
    }
  };

  if (threads == 1) {
    for (long q = 1; q <= n; ++q)
      slots[static_cast<size_t>(q - 1)] =
          ApproxRecord::from_nearest(certify_nearest(alpha, q, opts.refine));
  } else {
    std::vector<std::thread> pool;
    long chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      long lo = 1 + t * chunk;
      long hi = std::min(n + 1, lo + chunk);
      if (lo > n) break;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<ApproxRecord> out;
  out.reserve(static_cast<size_t>(n));
  for (long q = 1; q <= n; ++q) {
    auto& slot = slots[static_cast<size_t>(q - 1)];
    if (!slot) {
      // recompute serially so the caller gets the real diagnostic
      slot = ApproxRecord::from_nearest(certify_nearest(alpha, q, opts.refine));
    }
    out.push_back(std::move(*slot));
  }
  return out;
}

namespace {

bool same_value(const ApproxRecord& a, const ApproxRecord& b) {
  return a.p * b.q == b.p * a.q;
}

constexpr int kCompareRounds = 128;

}  // namespace

bool key_less(ApproxRecord& a, ApproxRecord& b, KeyChoice choice, const AlphaOracle& alpha,
              const RefineOptions& opts) {
  // |alpha - p/q| = |alpha - p'/q'| forces p/q = p'/q' as rationals, so the
  // per-denominator key admits exact ties only between rows reducing to the
  // same fraction; those can never be separated by refinement.
  if (choice == KeyChoice::PerDen && same_value(a, b)) return false;
  Rat width = std::min(a.key(choice).width(), b.key(choice).width());
  for (int round = 0; round < kCompareRounds; ++round) {
    if (a.key(choice).strictly_precedes(b.key(choice))) return true;
    if (b.key(choice).strictly_precedes(a.key(choice))) return false;
    width /= 4;
    a.tighten(alpha, width);
    b.tighten(alpha, width);
  }
  throw precision_exhausted("key comparison between q = " + a.q.get_str() + " and q = " +
                                b.q.get_str() + " undecided after " +
                                std::to_string(kCompareRounds) + " rounds",
                            a.q);
}

bool key_below(ApproxRecord& a, KeyChoice choice, const Rat& threshold, const AlphaOracle& alpha,
               const RefineOptions& opts) {
  Rat width = a.key(choice).width();
  for (int round = 0; round < kCompareRounds; ++round) {
    if (a.key(choice).entirely_below(threshold)) return true;
    if (a.key(choice).entirely_above(threshold)) return false;
    width /= 4;
    a.tighten(alpha, width);
  }
  throw precision_exhausted("key of q = " + a.q.get_str() + " vs threshold " +
                                threshold.get_str() + " undecided after " +
                                std::to_string(kCompareRounds) + " rounds",
                            a.q);
}

BrainSequence brain_sequence(const AlphaOracle& alpha, long n, Kind kind,
                             const ScanOptions& opts) {
  std::vector<ApproxRecord> records = scan_records(alpha, n, opts);
  BrainSequence seq{kind, alpha.spec(), n, {}};
  KeyChoice choice = key_for(kind);

  if (kind == Kind::Third) {
    for (auto& rec : records) {
      if (!rec.irreducible) continue;
      if (!key_below(rec, choice, Rat(1), alpha, opts.refine)) continue;
      seq.items.push_back(
          BrainItem{static_cast<long>(seq.items.size()) + 1, rec.fraction().canonical(), rec});
    }
    return seq;
  }

  std::optional<size_t> best;
  for (size_t i = 0; i < records.size(); ++i) {
    if (best && !key_less(records[i], records[*best], choice, alpha, opts.refine)) continue;
    if (!records[i].irreducible)
      throw std::logic_error("prefix-minimum emitted a reducible fraction (q = " +
                             records[i].q.get_str() + ")");
    best = i;
    seq.items.push_back(BrainItem{static_cast<long>(seq.items.size()) + 1,
                                  records[i].fraction().canonical(), records[i]});
  }
  return seq;
}

std::vector<ApproxRecord> table_mode(const AlphaOracle& alpha, long n, Kind kind,
                                     const TableSelect& select, const ScanOptions& opts) {
  if (!select.top.has_value() == !select.below.has_value())
    throw std::invalid_argument("table_mode: select exactly one of top/below");
  std::vector<ApproxRecord> records = scan_records(alpha, n, opts);
  KeyChoice choice = key_for(kind);

  std::vector<size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t ia, size_t ib) {
    ApproxRecord& a = records[ia];
    ApproxRecord& b = records[ib];
    if (choice == KeyChoice::PerDen && same_value(a, b)) return a.q < b.q;
    return key_less(a, b, choice, alpha, opts.refine);
  });

  std::vector<ApproxRecord> out;
  if (select.top) {
    long count = std::min<long>(*select.top, static_cast<long>(order.size()));
    for (long i = 0; i < count; ++i) out.push_back(records[order[static_cast<size_t>(i)]]);
    return out;
  }
  for (size_t idx : order) {
    if (!key_below(records[idx], choice, *select.below, alpha, opts.refine)) break;
    out.push_back(records[idx]);
  }
  return out;
}

InclusionReport kind_inclusion_check(const AlphaOracle& alpha, long n, const ScanOptions& opts) {
  auto to_set = [](const BrainSequence& seq) {
    std::set<std::pair<Int, Int>> s;
    for (const auto& item : seq.items) s.emplace(item.frac.num, item.frac.den);
    return s;
  };
  BrainSequence one = brain_sequence(alpha, n, Kind::First, opts);
  BrainSequence two = brain_sequence(alpha, n, Kind::Second, opts);
  BrainSequence three = brain_sequence(alpha, n, Kind::Third, opts);
  auto s1 = to_set(one);
  auto s2 = to_set(two);
  auto s3 = to_set(three);

  InclusionReport report;
  report.ii_in_iii = true;
  report.iii_in_i = true;
  for (const auto& item : two.items) {
    if (!s3.count({item.frac.num, item.frac.den})) {
      report.ii_in_iii = false;
      report.witnesses.push_back(item.frac);
    }
  }
  for (const auto& item : three.items) {
    if (!s1.count({item.frac.num, item.frac.den})) {
      report.iii_in_i = false;
      report.witnesses.push_back(item.frac);
    }
  }
  report.i_equals_ii = s1 == s2;
  return report;
}

}  // namespace ratapprox
