#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "niven/foperator.hpp"

using namespace niven;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

RatPoly rp(std::vector<long> c) {
  std::vector<Rational> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = Rational(c[i]);
  return RatPoly(v);
}

RatPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-9, 9);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& v : c) v = Rational(coef(rng));
  return RatPoly(c);
}

}  // namespace

TEST_CASE("f_exp examples") {
  CHECK(f_exp(rp({4})) == rp({4}));
  CHECK(f_exp(rp({0, 1, -1})) == rp({-3, 3, -1}));          // x(1-x)
  CHECK(f_exp(rp({0, 0, 1, -2, 1})) == rp({38, -38, 19, -6, 1}));
}

TEST_CASE("f_sin examples") {
  CHECK(f_sin(rp({1})) == rp({1}));
  CHECK(f_sin(rp({0, 0, 1})) == rp({-2, 0, 1}));  // x^2 - 2
  CHECK(f_sin(rp({0, 1, -1})) == rp({2, 1, -1}));
}

TEST_CASE("telescoping identities") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    RatPoly f = random_poly(rng, 12);
    RatPoly Fe = f_exp(f);
    CHECK(Fe + derivative(Fe) == f);
    RatPoly Fs = f_sin(f);
    CHECK(Fs + derivative(derivative(Fs)) == f);
  }
}

TEST_CASE("exp_integral_exact") {
  LinearFormExp z = exp_integral_exact(RatPoly(), Rational(1));
  CHECK(z.u == 0);
  CHECK(z.v == 0);
  LinearFormExp a = exp_integral_exact(rp({0, 1, -1}), Rational(1));
  CHECK(a.u == -1);
  CHECK(a.v == 3);  // integral = 3 - e
  LinearFormExp b = exp_integral_exact(rp({0, 0, 1, -2, 1}), Rational(1));
  CHECK(b.u == 14);
  CHECK(b.v == -38);  // 14e - 38
  Enclosure e = b.enclose(Q("1e-30"));
  CHECK(e.width() <= Q("1e-30"));
  CHECK(Q("0.0559") < e.lo());
  CHECK(e.hi() < Q("0.056"));
}

TEST_CASE("sin_integral_exact") {
  LinearFormTrig z = sin_integral_exact(RatPoly(), Rational(2));
  CHECK((z.s == 0 && z.t == 0 && z.w == 0));
  Rational c(5, 3);
  LinearFormTrig one = sin_integral_exact(rp({1}), c);
  CHECK(one.s == 0);
  CHECK(one.t == -1);
  CHECK(one.w == 1);  // 1 - cos c
  LinearFormTrig sq = sin_integral_exact(rp({0, 0, 1}), c);
  CHECK(sq.s == 2 * c);
  CHECK(sq.t == -(c * c - 2));
  CHECK(sq.w == -2);
  CHECK(sq.enclose(Q("1e-25")).width() <= Q("1e-25"));
}

TEST_CASE("linear form enclosures respect the width contract") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> big(-1000000, 1000000);
  for (int i = 0; i < 20; ++i) {
    LinearFormExp f{Rational(big(rng)), Rational(big(rng)), Rational(3, 2)};
    CHECK(f.enclose(Q("1e-20")).width() <= Q("1e-20"));
    LinearFormTrig g{Rational(big(rng)), Rational(big(rng)), Rational(0),
                     Rational(7, 4)};
    CHECK(g.enclose(Q("1e-20")).width() <= Q("1e-20"));
  }
}

TEST_CASE("corollary1_quantities") {
  CHECK(corollary1_quantities(3, 0) == std::pair<Int, Int>{Int(1), Int(1)});
  CHECK(corollary1_quantities(1, 1) == std::pair<Int, Int>{Int(-3), Int(-1)});
  CHECK(corollary1_quantities(1, 2) == std::pair<Int, Int>{Int(19), Int(7)});
  // integrality for a grid of (r, n): no defect thrown
  for (unsigned long r = 1; r <= 4; ++r)
    for (unsigned long n = 0; n <= 8; ++n) CHECK_NOTHROW(corollary1_quantities(r, n));
}

TEST_CASE("corollary2_quantities") {
  CHECK(corollary2_quantities(9, 4, 0) == std::pair<Int, Int>{Int(1), Int(1)});
  CHECK(corollary2_quantities(1, 1, 1) == std::pair<Int, Int>{Int(2), Int(2)});
  for (unsigned long a : {3ul, 22ul})
    for (unsigned long b : {1ul, 7ul})
      for (unsigned long n = 0; n <= 6; ++n)
        CHECK_NOTHROW(corollary2_quantities(a, b, n));
}

TEST_CASE("enclose_integral_series against known antiderivatives") {
  Enclosure em1 = enclose_integral_series(rp({1}), Rational(1), Kernel::exp,
                                          Q("1e-10"));
  CHECK(em1.contains(enclose_exp(Rational(1), Q("1e-15")) - Rational(1)));
  Enclosure three_minus_e = enclose_integral_series(rp({0, 1, -1}), Rational(1),
                                                    Kernel::exp, Q("1e-20"));
  CHECK(three_minus_e.intersects(
      exp_integral_exact(rp({0, 1, -1}), Rational(1)).enclose(Q("1e-20"))));
  Rational c(9, 5);
  Enclosure omc =
      enclose_integral_series(rp({1}), c, Kernel::sin, Q("1e-15"));
  Enclosure ref = Enclosure(Rational(1)) - enclose_cos(c, Q("1e-20"));
  CHECK(omc.intersects(ref));
}

TEST_CASE("exact and series routes agree on random integrals") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> cnum(1, 5), cden(1, 3), pick(0, 1);
  Rational eps = Q("1e-30");
  for (int i = 0; i < 60; ++i) {
    RatPoly f = random_poly(rng, 8);
    Rational c(cnum(rng), cden(rng));
    c.canonicalize();
    bool use_exp = pick(rng) == 0;
    Enclosure exact = use_exp ? exp_integral_exact(f, c).enclose(eps)
                              : sin_integral_exact(f, c).enclose(eps);
    Enclosure series = enclose_integral_series(
        f, c, use_exp ? Kernel::exp : Kernel::sin, eps);
    CHECK(exact.intersects(series));
  }
}
