#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratapprox/alpha.hpp"
#include "ratapprox/nearest.hpp"
#include "ratapprox/numeric.hpp"

namespace ratapprox {

/// The three extremum problems: minimize |alpha - p/q| (first kind),
/// |q*alpha - p| (second kind), or satisfy q*||q*alpha|| < 1 (third kind).
enum class Kind { First, Second, Third };

std::string kind_name(Kind);               // "I", "II", "III"
std::optional<Kind> parse_kind(std::string_view);

/// Which of the three sort keys governs a scan row.
enum class KeyChoice { PerDen /* ||qa||/q */, Abs /* ||qa|| */, TimesDen /* q*||qa|| */ };

inline KeyChoice key_for(Kind k) {
  switch (k) {
    case Kind::First: return KeyChoice::PerDen;
    case Kind::Second: return KeyChoice::Abs;
    case Kind::Third: return KeyChoice::TimesDen;
  }
  throw std::logic_error("unreachable");
}

/// One scan row: q, [q*alpha], the three certified sort keys and the side.
struct ApproxRecord {
  Int q;
  Int p;  // [q*alpha]
  Sign sign;
  RationalInterval key1;  // ||q*alpha|| / q
  RationalInterval key2;  // ||q*alpha||
  RationalInterval key3;  // q * ||q*alpha||
  bool irreducible;

  static ApproxRecord from_nearest(const NearestResult& n);

  /// Recomputes the distance enclosure at the given width.
  void tighten(const AlphaOracle& alpha, const Rat& width);

  const RationalInterval& key(KeyChoice c) const {
    switch (c) {
      case KeyChoice::PerDen: return key1;
      case KeyChoice::Abs: return key2;
      case KeyChoice::TimesDen: return key3;
    }
    throw std::logic_error("unreachable");
  }

  Fraction fraction() const { return Fraction::raw(p, q); }
};

struct ScanOptions {
  RefineOptions refine;
  int threads = 1;  // parallel record computation; output is order-deterministic
};

/// Records for q = 1..n in denominator order.
std::vector<ApproxRecord> scan_records(const AlphaOracle& alpha, long n,
                                       const ScanOptions& opts = {});

/// Certified strict key comparison; tightens both records on demand.
/// Exactly equal keys (possible for the first kind when the rows reduce to
/// the same fraction) compare not-less on both sides.
bool key_less(ApproxRecord& a, ApproxRecord& b, KeyChoice choice, const AlphaOracle& alpha,
              const RefineOptions& opts = {});

/// Certified value-vs-rational comparison (the value is irrational, so
/// refinement always resolves it).
bool key_below(ApproxRecord& a, KeyChoice choice, const Rat& threshold, const AlphaOracle& alpha,
               const RefineOptions& opts = {});

struct BrainItem {
  long k;  // 1-based index in the sequence
  Fraction frac;  // reduced
  ApproxRecord record;
};

struct BrainSequence {
  Kind kind;
  AlphaSpec alpha;
  long limit;
  std::vector<BrainItem> items;
};

/// Streaming enumeration up to denominator n. Kinds I/II emit a new item
/// whenever the governing key strictly drops below the running minimum
/// (certified); kind III keeps every irreducible row with q*||q*alpha|| < 1.
BrainSequence brain_sequence(const AlphaOracle& alpha, long n, Kind kind,
                             const ScanOptions& opts = {});

/// Row selection for table mode: the first `top` rows, or every row whose
/// key is certified below `below`.
struct TableSelect {
  std::optional<long> top;
  std::optional<Rat> below;
  static TableSelect top_k(long k) { return {k, std::nullopt}; }
  static TableSelect below_threshold(Rat t) { return {std::nullopt, std::move(t)}; }
};

/// Full scan sorted ascending by the kind's key (certified comparisons),
/// reducible rows included. Exact key ties order by ascending q.
std::vector<ApproxRecord> table_mode(const AlphaOracle& alpha, long n, Kind kind,
                                     const TableSelect& select, const ScanOptions& opts = {});

struct InclusionReport {
  bool ii_in_iii = false;
  bool iii_in_i = false;
  bool i_equals_ii = false;  // holds for the golden ratio
  std::vector<Fraction> witnesses;  // inclusion violations (must be empty)
};

/// Set inclusion of the reduced-fraction sequences over q <= n.
InclusionReport kind_inclusion_check(const AlphaOracle& alpha, long n,
                                     const ScanOptions& opts = {});

}  // namespace ratapprox
