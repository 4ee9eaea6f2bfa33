#include <doctest.h>

#include <random>

#include "ratapprox/alpha.hpp"

using namespace ratapprox;

namespace {

// ---- independent oracles (test-only) ----------------------------------

// arctan(1/n) bracketed by alternating partial sums of the Leibniz series.
RationalInterval arctan_inv_oracle(long inv, int terms) {
  Rat lo, hi, sum(0);
  Rat x(1, inv);
  Rat x2 = x * x;
  Rat power = x;
  bool have_lo = false, have_hi = false;
  for (int k = 0; k < terms; ++k) {
    Rat term = power / Rat(2 * k + 1);
    if (k % 2 == 0) {
      sum += term;
      hi = sum;  // ends on +term: overshoot
      have_hi = true;
    } else {
      sum -= term;
      lo = sum;  // ends on -term: undershoot
      have_lo = true;
    }
    power *= x2;
  }
  REQUIRE(have_lo);
  REQUIRE(have_hi);
  return RationalInterval(lo, hi);
}

// pi = 16 arctan(1/5) - 4 arctan(1/239), enclosure width far below 1e-220.
RationalInterval pi_oracle() {
  RationalInterval a5 = arctan_inv_oracle(5, 170);
  RationalInterval a239 = arctan_inv_oracle(239, 60);
  return RationalInterval(16 * a5.lo() - 4 * a239.hi(), 16 * a5.hi() - 4 * a239.lo());
}

// e = sum 1/k! with remainder below 2/(n+1)!.
RationalInterval e_oracle(int n) {
  Rat sum(0);
  Int fact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    sum += Rat(1, fact);
  }
  Rat rem = Rat(2, fact * (n + 1));
  return RationalInterval(sum, sum + rem);
}

// plain integer bisection on m^2 <= d * 4^k (independent of mpz_sqrt)
RationalInterval sqrt_bisection_oracle(long d, int k) {
  Int scale = Int(1) << k;
  Int target = d * scale * scale;
  Int lo = 0, hi = Int(d) + 1;
  hi *= scale;
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (mid * mid <= target)
      lo = mid;
    else
      hi = mid;
  }
  return RationalInterval(Rat(lo, scale), Rat(Int(lo + 1), scale));
}

}  // namespace

TEST_CASE("alpha spec grammar") {
  CHECK(parse_alpha("pi").kind() == AlphaSpec::Kind::Pi);
  CHECK(parse_alpha("e").kind() == AlphaSpec::Kind::E);

  AlphaSpec phi = parse_alpha("phi");
  CHECK(phi.kind() == AlphaSpec::Kind::Quadratic);
  CHECK(phi.quad_a() == 1);
  CHECK(phi.quad_b() == 1);
  CHECK(phi.quad_c() == 2);
  CHECK(phi.quad_d() == 5);
  CHECK(phi == AlphaSpec::quadratic(1, 1, 2, 5));

  AlphaSpec r2 = parse_alpha("sqrt:2");
  CHECK(r2.kind() == AlphaSpec::Kind::Sqrt);
  CHECK(r2.quad_d() == 2);
  CHECK(r2.str() == "sqrt:2");

  AlphaSpec q = parse_alpha("quad:-3,2,7,13");
  CHECK(q.quad_a() == -3);
  CHECK(q.quad_b() == 2);
  CHECK(q.quad_c() == 7);
  CHECK(q.quad_d() == 13);

  AlphaSpec dec = parse_alpha("dec:3.14");
  CHECK(dec.kind() == AlphaSpec::Kind::DecimalDigits);
  CHECK(dec.error_bound() == Rat(1, 100));  // one unit in the last place
  CHECK(parse_alpha("dec:3.14@1/1000").error_bound() == Rat(1, 1000));

  CHECK_THROWS_AS(parse_alpha("sqrt:4"), rational_value_error);
  CHECK_THROWS_AS(parse_alpha("sqrt:0"), parse_error);
  CHECK_THROWS_AS(parse_alpha("sqrt:-2"), parse_error);
  CHECK_THROWS_AS(parse_alpha("quad:1,0,2,5"), rational_value_error);
  CHECK_THROWS_AS(parse_alpha("quad:1,1,2,9"), rational_value_error);
  CHECK_THROWS_AS(parse_alpha("quad:1,1,0,5"), parse_error);
  CHECK_THROWS_AS(parse_alpha("quad:1,1,2"), parse_error);
  CHECK_THROWS_AS(parse_alpha("tau"), parse_error);
  CHECK_THROWS_AS(parse_alpha("dec:3.14@0"), parse_error);
  CHECK_THROWS_AS(parse_alpha("dec:x"), parse_error);
}

TEST_CASE("embedded pi digits verified against the arctan oracle") {
  AlphaOracle pi(AlphaSpec::pi());
  RationalInterval machin = pi_oracle();
  REQUIRE(machin.width() < pow10_q(-230));

  // the tightest enclosure the embedded digits can certify
  RationalInterval deep = pi.enclosure(pow10_q(-219));
  CHECK(deep.lo() <= machin.lo());
  CHECK(machin.hi() <= deep.hi());

  // classical anchors
  RationalInterval coarse = pi.enclosure(Rat(1, 100000000));
  CHECK(coarse.entirely_above(Rat(31415926, 10000000)));
  CHECK(coarse.entirely_below(Rat(31415927, 10000000)));
  CHECK(coarse.entirely_above(Rat(223, 71)));
  CHECK(coarse.entirely_below(Rat(22, 7)));
}

TEST_CASE("embedded e digits verified against the factorial series oracle") {
  AlphaOracle e(AlphaSpec::e());
  RationalInterval series = e_oracle(140);
  REQUIRE(series.width() < pow10_q(-230));
  RationalInterval deep = e.enclosure(pow10_q(-219));
  CHECK(deep.lo() <= series.lo());
  CHECK(series.hi() <= deep.hi());
}

TEST_CASE("precision exhaustion of digit-backed constants") {
  AlphaOracle pi(AlphaSpec::pi());
  CHECK_THROWS_AS(pi.enclosure(pow10_q(-240)), precision_exhausted);

  AlphaOracle dec(AlphaSpec::decimal_digits("3.14", Rat(1, 100)));
  CHECK_THROWS_AS(dec.enclosure(Rat(1, 1000000)), precision_exhausted);
  RationalInterval ok = dec.enclosure(Rat(1, 10));
  CHECK(ok.lo() == Rat(313, 100));  // 313/100 is canonical
  CHECK(ok.hi() == Rat(63, 20));
}

TEST_CASE("sqrt enclosures vs the bisection oracle") {
  AlphaOracle r5(AlphaSpec::sqrt(5));
  RationalInterval impl = r5.enclosure(Rat(1, 100));
  CHECK(impl.width() < Rat(1, 100));
  // defining property, no trusted digits involved
  CHECK(impl.lo() * impl.lo() < 5);
  CHECK(5 < impl.hi() * impl.hi());
  // must agree with the independent bisection route
  RationalInterval oracle = sqrt_bisection_oracle(5, 40);
  CHECK(impl.intersects(oracle));

  for (long d : {2L, 3L, 7L, 1000003L}) {
    AlphaOracle rd(AlphaSpec::sqrt(d));
    RationalInterval enc = rd.enclosure(Rat(1, 1000000));
    CHECK(enc.lo() * enc.lo() < d);
    CHECK(Rat(d) < enc.hi() * enc.hi());
    CHECK(enc.intersects(sqrt_bisection_oracle(d, 40)));
  }
}

TEST_CASE("quadratic enclosures") {
  // phi = (1 + sqrt(5))/2: 1.6180339887...
  AlphaOracle phi(AlphaSpec::phi());
  RationalInterval enc = phi.enclosure(Rat(1, 8));
  CHECK(enc.width() < Rat(1, 8));
  CHECK(enc.contains(Rat(Int("16180339887"), pow10_z(10))));

  // negative value: -(1 + sqrt(2))
  AlphaOracle neg(AlphaSpec::quadratic(-1, -1, 1, 2));
  RationalInterval n = neg.enclosure(Rat(1, 1000));
  CHECK(n.entirely_below(Rat(-2)));
  CHECK(n.entirely_above(Rat(-5, 2)));
}

TEST_CASE("scaled enclosures are exact rescalings") {
  std::mt19937_64 rng(20260810);
  for (const char* text : {"pi", "e", "phi", "sqrt:2"}) {
    AlphaOracle alpha(parse_alpha(text));
    for (int rep = 0; rep < 20; ++rep) {
      long q = 1 + static_cast<long>(rng() % 100000);
      long denom_exp = 1 + static_cast<long>(rng() % 12);
      Rat eps = pow10_q(-denom_exp);
      RationalInterval scaled = alpha.scaled_enclosure(q, eps);
      RationalInterval base = alpha.enclosure(eps / q);
      CHECK(scaled.lo() == base.lo() * q);
      CHECK(scaled.hi() == base.hi() * q);
      CHECK(scaled.width() < eps);
    }
  }
  // q = 1 identity case
  AlphaOracle phi(AlphaSpec::phi());
  RationalInterval one = phi.scaled_enclosure(1, Rat(1, 8));
  CHECK(one.width() < Rat(1, 8));
  CHECK(one.contains(Rat(1618, 1000)));
  // 7*pi around 21.99, certified to 1/1000
  AlphaOracle pi(AlphaSpec::pi());
  RationalInterval seven = pi.scaled_enclosure(7, Rat(1, 1000));
  CHECK(seven.entirely_above(Rat(2199, 100)));
  CHECK(seven.entirely_below(Rat(2200, 100)));
  // 10*sqrt(2) around 14.1421
  AlphaOracle r2(AlphaSpec::sqrt(2));
  RationalInterval ten = r2.scaled_enclosure(10, Rat(1, 100));
  CHECK(ten.contains(Rat(141421, 10000)));
}

TEST_CASE("enclosures nest around the same value and are deterministic") {
  for (const char* text : {"pi", "e", "phi", "sqrt:7", "quad:3,-2,5,11"}) {
    AlphaOracle alpha(parse_alpha(text));
    RationalInterval prev = alpha.enclosure(Rat(1, 2));
    for (int k = 1; k <= 24; k += 3) {
      RationalInterval next = alpha.enclosure(pow10_q(-k));
      CHECK(next.intersects(prev));  // both must contain alpha
      prev = next;
    }
    RationalInterval again = alpha.enclosure(pow10_q(-22));
    RationalInterval same = alpha.enclosure(pow10_q(-22));
    CHECK(again.lo() == same.lo());
    CHECK(again.hi() == same.hi());
  }
}
