#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "niven/legendre.hpp"
#include "niven/witness.hpp"

using namespace niven;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("fourier_witness small denominators") {
  Certificate c1 = fourier_witness(1, Q("1e-30"));
  CHECK(c1.verdict == Verdict::falsified);
  CHECK(c1.integer_side == 2);  // 1! (1/0! + 1/1!)
  CHECK(c1.bound == 1);
  // T = e - 2; a width-1e-30 enclosure must straddle the frozen bracket
  CHECK(c1.enclosed_side.width() <= Q("1e-30"));
  CHECK(c1.enclosed_side.lo() <=
        Q("0.71828182845904523536028747135266249776"));
  CHECK(Q("0.71828182845904523536028747135266249775") <= c1.enclosed_side.hi());
  Certificate c2 = fourier_witness(2, Q("1e-30"));
  CHECK(c2.verdict == Verdict::falsified);
  CHECK(c2.integer_side == 5);
  CHECK(c2.bound == Rational(1, 2));
  CHECK(c2.enclosed_side.lo() <=
        Q("0.43656365691809047072057494270532499552"));
  CHECK(Q("0.43656365691809047072057494270532499551") <= c2.enclosed_side.hi());
  CHECK_THROWS_AS(fourier_witness(0, Q("1e-10")), std::domain_error);
}

TEST_CASE("naive_er_bound") {
  auto [b1, f1] = naive_er_bound(1, 7);
  CHECK(b1 == Rational(1, 7));
  CHECK(!f1);
  auto [b2, f2] = naive_er_bound(2, 4);
  CHECK(b2 == Rational(32, 3));
  CHECK(f2);
  CHECK_THROWS_AS(naive_er_bound(3, 2), std::domain_error);
}

TEST_CASE("crude_bound_exp and minimal_n_exp") {
  Rational b0 = crude_bound_exp(1, 1, 0);
  CHECK(b0 > Q("2.718"));
  CHECK(b0 < Q("2.72"));
  CHECK(crude_bound_exp(1, 1, 6) < 1);
  CHECK(minimal_n_exp(1, 1) == 3);
  // definition check: first n with bound < 1
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long q = 1; q <= 3; ++q) {
      unsigned long n = minimal_n_exp(r, q);
      CHECK(crude_bound_exp(r, q, n) < 1);
      if (n > 0) CHECK(crude_bound_exp(r, q, n - 1) >= 1);
    }
  CHECK_THROWS_AS(minimal_n_exp(5, 100, 3), resource_error);
}

TEST_CASE("minimal_n_cbs") {
  CHECK(minimal_n_cbs(1, 1) == 1);
  for (unsigned long r = 1; r <= 3; ++r) {
    unsigned long n = minimal_n_cbs(r, 2);
    CHECK(cbs_bound(n, r, 2) < 1);
    if (n > 2 * r - 1) CHECK(cbs_bound(n - 1, r, 2) >= 1);
  }
}

TEST_CASE("minimal_n_pi") {
  CHECK(minimal_n_pi(3, 1) == 24);
  CHECK(minimal_n_pi(1, 1) == 2);
  CHECK(minimal_n_pi(22, 7) == 1313);
  // crossing property, exact
  auto bound_lt1 = [](unsigned long a, unsigned long b, unsigned long n) {
    return pow_int(Int(a), 2 * n + 1) < Int(b) * factorial(n);
  };
  CHECK(bound_lt1(3, 1, 24));
  CHECK(!bound_lt1(3, 1, 23));
  CHECK(bound_lt1(22, 7, 1313));
  CHECK(!bound_lt1(22, 7, 1312));
  CHECK_THROWS_AS(minimal_n_pi(22, 7, 100), resource_error);
}

TEST_CASE("niven_boundary_values agrees with the polynomial route") {
  for (unsigned long a : {1ul, 3ul, 22ul})
    for (unsigned long b : {1ul, 7ul})
      for (unsigned long n = 0; n <= 10; ++n) {
        auto [v0, v1] = niven_boundary_values(a, b, n);
        auto [f0, bfab] = corollary2_quantities(a, b, n);
        Int bn = pow_int(Int(b), n);
        CHECK(v0 == bn * f0);  // b^n F(0)/n!
        CHECK(v0 == bfab);     // symmetry: b^n F(a/b)/n! = b^n F(0)/n!
        // F'(0) via explicit polynomial differentiation
        RatPoly F = f_sin(to_rat(niven_poly(a, b, n)));
        Rational fp0 = eval_rational(derivative(F), Rational(0));
        CHECK(Rational(v1) == Rational(bn) * fp0 / Rational(factorial(n)));
      }
}

TEST_CASE("niven_falsify small candidates") {
  Certificate c3 = niven_falsify(3, 1, std::nullopt, Q("1e-30"),
                                 kDefaultScanCap);
  CHECK(c3.verdict == Verdict::falsified);
  CHECK(c3.n == 24);
  CHECK(c3.integer_side ==
        Int("2899224681603964712015230340054708562"));
  CHECK(c3.enclosed_side.lo() > 0);
  CHECK(c3.enclosed_side.hi() < 1);
  CHECK(Q("2.38160091253428e-16") < c3.enclosed_side.lo());
  CHECK(c3.enclosed_side.hi() < Q("2.38160091253429e-16"));

  Certificate c1 = niven_falsify(1, 1, std::nullopt, Q("1e-30"),
                                 kDefaultScanCap);
  CHECK(c1.verdict == Verdict::falsified);
  CHECK(c1.n == 2);

  Certificate c227 = niven_falsify(22, 7, std::nullopt, Q("1e-40"),
                                   kDefaultScanCap);
  CHECK(c227.verdict == Verdict::falsified);
  CHECK(c227.n == 1313);
  CHECK(c227.enclosed_side.lo() > 0);
  CHECK(c227.enclosed_side.hi() < 1);
  Enclosure diff =
      Enclosure(Rational(c227.integer_side)) - c227.enclosed_side;
  CHECK(diff.excludes_zero());

  CHECK_THROWS_AS(niven_falsify(0, 1, std::nullopt, Q("1e-10"), 100),
                  std::domain_error);
  CHECK_THROWS_AS(niven_falsify(22, 7, std::nullopt, Q("1e-10"), 100),
                  resource_error);
}

TEST_CASE("explicit n overrides the minimal choice") {
  Certificate c = niven_falsify(3, 1, 30, Q("1e-30"), kDefaultScanCap);
  CHECK(c.n == 30);
  CHECK(c.verdict == Verdict::falsified);
}
