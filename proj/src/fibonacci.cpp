#include "ratapprox/fibonacci.hpp"

#include <optional>

#include "ratapprox/nearest.hpp"

namespace ratapprox {

FibSequence fib_via_nearest(long n_max) {
  if (n_max < 1) throw std::invalid_argument("fib_via_nearest: n_max must be >= 1");
  AlphaOracle phi(AlphaSpec::phi());
  FibSequence seq;
  seq.terms.push_back(1);
  while (static_cast<long>(seq.terms.size()) < n_max) {
    seq.terms.push_back(certify_nearest(phi, seq.terms.back()).nearest_qa);
  }
  return seq;
}

namespace {

Rat pow_rat(const Rat& x, long n) {
  Int num = x.get_num();
  Int den = x.get_den();
  Int pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
  Rat r(pn, pd);
  r.canonicalize();
  return r;
}

// certified [phi^n / sqrt(5)]
Int binet_nearest(const AlphaOracle& phi, long n) {
  Rat half(1, 2);
  // phi^n/sqrt(5) ~ 10^(n/5); start past that so one or two rounds suffice
  for (unsigned long k = static_cast<unsigned long>(n / 4 + 8);; k += k / 2 + 1) {
    RationalInterval p = phi.enclosure(pow10_q(-static_cast<long>(k)));
    RationalInterval s5 = sqrt_enclosure(5, k);
    // positive endpoints: [lo^n/hi5, hi^n/lo5] encloses phi^n/sqrt(5)
    RationalInterval v(pow_rat(p.lo(), n) / s5.hi(), pow_rat(p.hi(), n) / s5.lo());
    Int m = floor_rat(v.lo());
    for (const Int& r : {m, Int(m + 1)}) {
      Rat rr(r);
      if (rr - half < v.lo() && v.hi() < rr + half) return r;
    }
    if (k > 4096) throw std::logic_error("binet_nearest failed to converge");
  }
}

}  // namespace

BinetReport binet_round_check(long n_max) {
  if (n_max < 1) throw std::invalid_argument("binet_round_check: n_max must be >= 1");
  AlphaOracle phi(AlphaSpec::phi());
  FibSequence seq = fib_via_nearest(n_max);
  BinetReport report{n_max, {}};
  for (long n = 1; n <= n_max; ++n) {
    if (binet_nearest(phi, n) != seq.terms[static_cast<size_t>(n - 1)])
      report.failures.push_back(n);
  }
  return report;
}

}  // namespace ratapprox
