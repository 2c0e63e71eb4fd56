#include "niven/witness.hpp"

#include <cmath>

#include "niven/detail/binary_splitting.hpp"
#include "niven/legendre.hpp"

namespace niven {

std::string to_string(Verdict v) {
  return v == Verdict::falsified ? "falsified" : "indeterminate";
}

Certificate fourier_witness(unsigned long q, const Rational& eps) {
  if (q < 1) throw std::domain_error("fourier_witness: need q >= 1");
  if (eps <= 0) throw std::domain_error("eps must be > 0");
  Int qfact = factorial(q);
  Int s(0);
  for (unsigned long k = 0; k <= q; ++k) {
    Int term;
    mpz_divexact(term.get_mpz_t(), qfact.get_mpz_t(),
                 factorial(k).get_mpz_t());
    s += term;
  }
  Enclosure e = enclose_exp(Rational(1), eps / Rational(qfact));
  Enclosure t = e.scale(Rational(qfact)) - Rational(s);
  Rational bound(1, q);
  Verdict verdict = (t.lo() > 0 && t.hi() <= bound) ? Verdict::falsified
                                                    : Verdict::indeterminate;
  return Certificate{"fourier-e", Rational(q),      std::nullopt, s, t,
                     bound,       verdict,          eps};
}

std::pair<Rational, bool> naive_er_bound(unsigned long r, unsigned long q) {
  if (r < 1 || q < 1) throw std::domain_error("naive_er_bound: need r, q >= 1");
  if (q + 1 <= r)
    throw std::domain_error(
        "naive_er_bound: requires q + 1 > r (comparison series diverges)");
  Rational bound(pow_int(Int(r), q + 1), Int(q + 1 - r));
  bound.canonicalize();
  return {bound, bound >= 1};
}

namespace {

Rational exp_upper_bound(unsigned long r) {
  return enclose_exp(Rational(r), parse_rational("1e-6")).hi();
}

}  // namespace

Rational crude_bound_exp(unsigned long r, unsigned long q, unsigned long n) {
  if (r < 1 || q < 1)
    throw std::domain_error("crude_bound_exp: need r, q >= 1");
  return Rational(Int(q) * pow_int(Int(r), 2 * n + 1)) * exp_upper_bound(r) /
         Rational(factorial(n));
}

unsigned long minimal_n_exp(unsigned long r, unsigned long q,
                            unsigned long cap) {
  if (r < 1 || q < 1) throw std::domain_error("minimal_n_exp: need r, q >= 1");
  Rational ebar = exp_upper_bound(r);
  Rational r2(Int(r) * Int(r));
  Rational bound = Rational(Int(q) * Int(r)) * ebar;  // n = 0
  for (unsigned long n = 0;; ++n) {
    if (bound < 1) return n;
    if (n >= cap) throw resource_error("minimal_n_exp: scan cap exceeded");
    bound = bound * r2 / Rational(n + 1);
  }
}

unsigned long minimal_n_cbs(unsigned long r, unsigned long q,
                            unsigned long cap) {
  if (r < 1 || q < 1) throw std::domain_error("minimal_n_cbs: need r, q >= 1");
  for (unsigned long n = 2 * r - 1;; ++n) {
    if (cbs_bound(n, r, q) < 1) return n;
    if (n >= cap) throw resource_error("minimal_n_cbs: scan cap exceeded");
  }
}

unsigned long minimal_n_pi(unsigned long a, unsigned long b,
                           unsigned long cap) {
  if (a < 1 || b < 1) throw std::domain_error("minimal_n_pi: need a, b >= 1");
  // bound(n) = a^{2n+1}/(b n!) < 1, exactly
  auto below_one = [&](unsigned long n) {
    return pow_int(Int(a), 2 * n + 1) < Int(b) * factorial(n);
  };
  if (below_one(0)) return 0;
  // The bound rises monotonically while n + 1 <= a^2 and falls afterwards,
  // so the first crossing can be located with a float-log scan and then
  // pinned down by exact comparisons.
  const double la = std::log(static_cast<double>(a));
  const double lb = std::log(static_cast<double>(b));
  unsigned long n = 1;
  while ((2.0 * n + 1.0) * la - lb - std::lgamma(static_cast<double>(n) + 1.0) >
         -2.0) {
    if (n >= cap) throw resource_error("minimal_n_pi: scan cap exceeded");
    ++n;
  }
  while (n > 1 && below_one(n - 1)) --n;
  while (!below_one(n)) {
    if (n >= cap) throw resource_error("minimal_n_pi: scan cap exceeded");
    ++n;
  }
  return n;
}

std::pair<Int, Int> niven_boundary_values(unsigned long a, unsigned long b,
                                          unsigned long n) {
  if (a < 1 || b < 1)
    throw std::domain_error("niven_boundary_values: need a, b >= 1");
  // f = x^n (a-bx)^n has coefficients c_{n+j} = C(n,j) a^{n-j} (-b)^j;
  // with F = f - f'' + f'''' - ...:
  //   b^n F(0)/n!  = sum over j with n+j even of
  //       (-1)^{(n+j)/2} (-1)^j (n+j)!/n! C(n,j) a^{n-j} b^{n+j}
  //   b^n F'(0)/n! = same over j with n+j odd, sign (-1)^{(n+j-1)/2}
  auto parity_sum = [&](bool even) -> Int {
    unsigned long j0 = ((n % 2 == 0) == even) ? 0 : 1;
    if (j0 > n) return Int(0);
    unsigned long terms = (n - j0) / 2 + 1;
    // first term
    unsigned long m = n + j0;
    unsigned long half = even ? m / 2 : (m - 1) / 2;
    Int t0 = pow_int(Int(a), n - j0) * pow_int(Int(b), m);
    if (j0 == 1) t0 *= Int(n) * Int(n + 1);  // C(n,1) * (n+1)!/n!
    if ((half + j0) % 2 == 1) t0 = -t0;
    Int a2 = Int(a) * Int(a), b2 = Int(b) * Int(b);
    detail::RawFraction s = detail::series_sum(
        t0, Int(1), terms, [&](unsigned long l, Int& num, Int& den) {
          unsigned long j = j0 + 2 * l;
          num = -Int(n + j + 2) * Int(n + j + 1) * Int(n - j) * Int(n - j - 1) *
                b2;
          den = Int(j + 1) * Int(j + 2) * a2;
        });
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), s.num.get_mpz_t(),
                s.den.get_mpz_t());
    if (rem != 0)
      throw defect_error("niven_boundary_values: non-integer sum");
    return quot;
  };
  return {parity_sum(true), parity_sum(false)};
}

namespace {

// Exact positive rational lower bound on (b^n/n!) int_0^{a/b} f sin x dx,
// or nullopt when the simple argument does not apply. The integrand is
// positive on (0, min(pi, c)); the positive part is bounded below on
// [c/4, 3c/4] and the possible overshoot past pi is bounded above
// through a pi enclosure.
std::optional<Rational> positive_lower_bound(unsigned long a, unsigned long b,
                                             unsigned long n) {
  Rational c(a, b);
  Enclosure pi = enclose_pi(parse_rational("1e-30"));
  if (!(3 * c / 4 < pi.lo())) return std::nullopt;
  Rational s1 = enclose_sin(c / 4, parse_rational("1e-10")).lo();
  Rational s2 = enclose_sin(3 * c / 4, parse_rational("1e-10")).lo();
  Rational smin = std::min(s1, s2);
  if (smin <= 0) return std::nullopt;
  // f(c/4) = f(3c/4) = ((c/4)(3a/4))^n is the minimum of f on [c/4, 3c/4]
  Rational base = (c / 4) * Rational(3 * Int(a), 4);
  base.canonicalize();
  Rational pos =
      (c / 2) * pow_rational(base, static_cast<long>(n)) * smin;
  Rational neg(0);
  Rational delta = c - pi.lo();
  if (delta > 0)
    neg = delta * delta *
          pow_rational(c * Rational(b) * delta, static_cast<long>(n));
  Rational total = (pos - neg) * Rational(pow_int(Int(b), n)) /
                   Rational(factorial(n));
  if (total <= 0) return std::nullopt;
  // compress to a nearby power-of-ten grid (any smaller positive
  // rational is still a sound lower bound)
  double l2 = detail::log2_rat(total);
  double d10 = -l2 * 0.30102999566398120;
  unsigned long d = d10 > 0 ? static_cast<unsigned long>(d10) + 3 : 3;
  Rational compact = floor_to_grid(total, pow_int(Int(10), d));
  if (compact <= 0) return std::nullopt;
  return compact;
}

}  // namespace

Certificate niven_falsify(unsigned long a, unsigned long b,
                          std::optional<unsigned long> n_opt,
                          const Rational& eps, unsigned long cap) {
  if (a < 1 || b < 1) throw std::domain_error("niven_falsify: need a, b >= 1");
  if (eps <= 0) throw std::domain_error("eps must be > 0");
  unsigned long n = n_opt ? *n_opt : minimal_n_pi(a, b, cap);
  Rational c(a, b);

  auto [v0, v1] = niven_boundary_values(a, b, n);
  Int integer_side = 2 * v0;  // b^n (F(a/b) + F(0))/n!, using F(a/b) = F(0)
  Rational coef_sin(-v1);     // b^n F'(a/b)/n!  = -b^n F'(0)/n!
  Rational coef_cos(-v0);     // -b^n F(a/b)/n!
  Rational coef_one(v0);      //  b^n F(0)/n!

  Rational crude = Rational(pow_int(Int(a), 2 * n + 1)) /
                   Rational(Int(b) * factorial(n));
  std::optional<Rational> lower = positive_lower_bound(a, b, n);

  auto attempt = [&](const Rational& e) {
    Enclosure es = enclose_sin(c, e / (4 * (rat_abs(coef_sin) + 1)));
    Enclosure ec = enclose_cos(c, e / (4 * (rat_abs(coef_cos) + 1)));
    Enclosure arith = (es.scale(coef_sin) + ec.scale(coef_cos) + coef_one)
                          .round_outward(detail::grid_denominator(e));
    Rational lo = arith.lo(), hi = arith.hi();
    if (lower && *lower > lo) lo = *lower;
    if (crude < hi) hi = crude;
    if (lo > hi)
      throw defect_error("niven_falsify: inconsistent enclosures");
    return Enclosure(std::move(lo), std::move(hi));
  };

  auto verdict_of = [&](const Enclosure& enclosed) {
    Enclosure diff = Enclosure(Rational(integer_side)) - enclosed;
    bool ok = enclosed.lo() > 0 && enclosed.hi() < 1 && diff.excludes_zero();
    return ok ? Verdict::falsified : Verdict::indeterminate;
  };

  Rational precision = eps;
  Enclosure enclosed = attempt(eps);
  Verdict verdict = verdict_of(enclosed);
  if (verdict == Verdict::indeterminate) {
    precision = eps * eps;  // one automatic refinement
    enclosed = attempt(precision);
    verdict = verdict_of(enclosed);
  }
  return Certificate{"niven-pi", c,       n,       integer_side,
                     enclosed,   crude,   verdict, precision};
}

}  // namespace niven
