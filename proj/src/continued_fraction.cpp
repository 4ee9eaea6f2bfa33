#include "ratapprox/continued_fraction.hpp"

#include <optional>

namespace ratapprox {

namespace {

constexpr int kMaxRounds = 256;

// Exact tail state: x = (A*alpha + B) / (C*alpha + D), det = AD - BC = +-1.
class TailExpander {
 public:
  explicit TailExpander(const AlphaOracle& alpha) : alpha_(alpha) {}

  Int tail_floor() {
    for (int round = 0; round < kMaxRounds; ++round) {
      RationalInterval t = tail_interval();
      Int m = floor_rat(t.lo());
      if (t.hi() <= Rat(m + 1)) return m;
      refine();
    }
    throw precision_exhausted("continued-fraction tail floor undecided at step " +
                                  std::to_string(step_),
                              step_);
  }

  struct TailNearest {
    Int a;
    int next_sign;  // sign(x - a)
  };

  TailNearest tail_nearest() {
    Rat half(1, 2);
    for (int round = 0; round < kMaxRounds; ++round) {
      RationalInterval t = tail_interval();
      Int m = floor_rat(t.lo());
      for (const Int& r : {m, Int(m + 1)}) {
        Rat rr(r);
        if (!(rr - half < t.lo() && t.hi() < rr + half)) continue;
        if (t.lo() > rr) return TailNearest{r, +1};
        if (t.hi() < rr) return TailNearest{r, -1};
        break;
      }
      refine();
    }
    throw precision_exhausted("continued-fraction tail nearest integer undecided at step " +
                                  std::to_string(step_),
                              step_);
  }

  // x <- sign / (x - a); sign = +1 for the regular algorithm.
  void step(const Int& a, int sign) {
    Int nc = A_ - a * C_;
    Int nd = B_ - a * D_;
    A_ = sign < 0 ? Int(-C_) : C_;
    B_ = sign < 0 ? Int(-D_) : D_;
    C_ = std::move(nc);
    D_ = std::move(nd);
    ++step_;
  }

 private:
  RationalInterval tail_interval() {
    for (int round = 0; round < kMaxRounds; ++round) {
      RationalInterval base = alpha_.enclosure(eps_);
      Rat dl = Rat(C_) * base.lo() + Rat(D_);
      Rat dh = Rat(C_) * base.hi() + Rat(D_);
      if (dl == 0 || dh == 0 || (dl < 0) != (dh < 0)) {
        refine();
        continue;
      }
      Rat x1 = (Rat(A_) * base.lo() + Rat(B_)) / dl;
      Rat x2 = (Rat(A_) * base.hi() + Rat(B_)) / dh;
      // alpha strictly inside the base interval and the map is a strictly
      // monotone Moebius transform, so the image interval is strict too
      return x1 < x2 ? RationalInterval(x1, x2) : RationalInterval(x2, x1);
    }
    throw precision_exhausted("continued-fraction tail denominator sign undecided at step " +
                                  std::to_string(step_),
                              step_);
  }

  void refine() { eps_ /= 2; }

  const AlphaOracle& alpha_;
  Int A_{1}, B_{0}, C_{0}, D_{1};
  Rat eps_{1, 4};
  long step_ = 0;
};

void append_convergent(std::vector<Fraction>& conv, const CFTerm& term, Int& p2, Int& q2, Int& p1,
                       Int& q1) {
  // p2/q2 = c_{k-2}, p1/q1 = c_{k-1}
  Int p = term.a * p1 + term.sign * p2;
  Int q = term.a * q1 + term.sign * q2;
  if (q < 1) throw std::logic_error("convergent recurrence produced q < 1");
  Fraction f(p, q, false);
  if (!f.is_irreducible()) throw std::logic_error("convergent recurrence lost coprimality");
  f.reduced = true;
  conv.push_back(f);
  p2 = std::move(p1);
  q2 = std::move(q1);
  p1 = std::move(p);
  q1 = std::move(q);
}

}  // namespace

std::vector<Fraction> convergents_from(const std::vector<CFTerm>& quotients) {
  std::vector<Fraction> conv;
  conv.reserve(quotients.size());
  Int p2 = 1, q2 = 0, p1 = 1, q1 = 0;  // c_{-2} unused, c_{-1} = 1/0
  bool first = true;
  for (const CFTerm& term : quotients) {
    if (first) {
      conv.push_back(Fraction(term.a, 1, true));
      p2 = 1;
      q2 = 0;
      p1 = term.a;
      q1 = 1;
      first = false;
      continue;
    }
    append_convergent(conv, term, p2, q2, p1, q1);
  }
  return conv;
}

CFExpansion rcf_expand(const AlphaOracle& alpha, long terms) {
  if (terms < 1) throw std::invalid_argument("rcf_expand: terms must be >= 1");
  CFExpansion exp;
  exp.algorithm = CFAlgorithm::RCF;
  TailExpander tail(alpha);
  for (long k = 0; k < terms; ++k) {
    Int a = tail.tail_floor();
    if (k > 0 && a < 1) throw std::logic_error("regular expansion produced a_k < 1 at k >= 1");
    exp.quotients.push_back(CFTerm{a, 1});
    if (k + 1 < terms) tail.step(a, 1);
  }
  exp.convergents = convergents_from(exp.quotients);
  return exp;
}

CFExpansion nicf_expand(const AlphaOracle& alpha, long terms) {
  if (terms < 1) throw std::invalid_argument("nicf_expand: terms must be >= 1");
  CFExpansion exp;
  exp.algorithm = CFAlgorithm::NICF;
  TailExpander tail(alpha);
  int pending_sign = 1;
  for (long k = 0; k < terms; ++k) {
    auto [a, next_sign] = tail.tail_nearest();
    if (k > 0 && !(a >= 2 || a <= -2))
      throw std::logic_error("nearest-integer expansion produced |a_k| < 2 at k >= 1");
    exp.quotients.push_back(CFTerm{a, pending_sign});
    pending_sign = next_sign;
    if (k + 1 < terms) tail.step(a, next_sign);
  }
  exp.convergents = convergents_from(exp.quotients);
  return exp;
}

std::string format_quotients(const CFExpansion& exp) {
  std::string out;
  for (size_t k = 0; k < exp.quotients.size(); ++k) {
    const CFTerm& t = exp.quotients[k];
    if (k == 0) {
      out += t.a.get_str();
      out += ";";
    } else {
      out += " ";
      out += t.sign < 0 ? '-' : '+';
      out += t.a.get_str();
      if (k + 1 < exp.quotients.size()) out += ",";
    }
  }
  return out;
}

namespace {

// |alpha - f| as a refinable certified enclosure.
class ErrorBox {
 public:
  ErrorBox(const AlphaOracle& alpha, Rat value) : alpha_(&alpha), value_(std::move(value)) {
    tighten();
  }

  const RationalInterval& err() const { return *err_; }

  void tighten() {
    for (int round = 0; round < kMaxRounds; ++round) {
      RationalInterval enc = alpha_->enclosure(eps_);
      eps_ /= 2;
      if (enc.hi() <= value_) {
        err_.emplace(value_ - enc.hi(), value_ - enc.lo());
        return;
      }
      if (enc.lo() >= value_) {
        err_.emplace(enc.lo() - value_, enc.hi() - value_);
        return;
      }
    }
    throw precision_exhausted("approximation error enclosure undecided", 0);
  }

  // certified |alpha - this| < |alpha - other|
  bool less_than(ErrorBox& other) {
    for (int round = 0; round < kMaxRounds; ++round) {
      if (err().strictly_precedes(other.err())) return true;
      if (other.err().strictly_precedes(err())) return false;
      tighten();
      other.tighten();
    }
    throw precision_exhausted("approximation error comparison undecided", 0);
  }

 private:
  const AlphaOracle* alpha_;
  Rat value_;
  Rat eps_{1, 4};
  std::optional<RationalInterval> err_;
};

}  // namespace

std::vector<Fraction> first_kind_from_cf(const AlphaOracle& alpha, long n) {
  if (n < 1) throw std::invalid_argument("first_kind_from_cf: n must be >= 1");
  std::vector<Fraction> out;
  std::optional<ErrorBox> best;

  auto emit = [&](Int p, Int q) {
    Fraction f = Fraction::make_reduced(p, q);
    // every emitted fraction must be the nearest fraction for its denominator
    NearestResult check = certify_nearest(alpha, f.den);
    if (check.nearest_qa != f.num)
      throw std::logic_error("ladder emitted a non-optimal numerator for q = " + f.den.get_str());
    best.emplace(alpha, f.value());
    out.push_back(std::move(f));
  };

  TailExpander tail(alpha);
  Int a0 = tail.tail_floor();
  // the integer candidate a0/1 survives only when a0 is the nearest integer
  if (certify_nearest(alpha, 1).nearest_qa == a0) emit(a0, 1);

  Int p_prev = 1, q_prev = 0;  // c_{k-1}
  Int p_cur = a0, q_cur = 1;   // c_k
  Int last_quotient = a0;
  while (q_prev + q_cur <= n) {
    tail.step(last_quotient, 1);
    Int a_next = tail.tail_floor();  // a_{k+1}
    bool past_limit = false;
    // semiconvergent ladder (p_{k-1} + t p_k)/(q_{k-1} + t q_k), t = 1..a_{k+1}
    for (Int t = 1; t <= a_next; ++t) {
      Int qc = q_prev + t * q_cur;
      if (qc > n) {
        past_limit = true;
        break;
      }
      Int pc = p_prev + t * p_cur;
      ErrorBox cand(alpha, Rat(pc) / Rat(qc));
      if (!best || cand.less_than(*best)) emit(std::move(pc), std::move(qc));
    }
    if (past_limit) break;
    Int p_next = a_next * p_cur + p_prev;
    Int q_next = a_next * q_cur + q_prev;
    p_prev = std::move(p_cur);
    q_prev = std::move(q_cur);
    p_cur = std::move(p_next);
    q_cur = std::move(q_next);
    last_quotient = std::move(a_next);
  }
  return out;
}

}  // namespace ratapprox
