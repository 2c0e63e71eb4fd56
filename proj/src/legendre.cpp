#include "niven/legendre.hpp"

namespace niven {

RatPoly legendre_sum_formula(unsigned long n) {
  RatPoly xm1(std::vector<Rational>{Rational(-1), Rational(1)});
  RatPoly xp1(std::vector<Rational>{Rational(1), Rational(1)});
  RatPoly sum;
  for (unsigned long l = 0; l <= n; ++l) {
    Int c = binomial(n, l);
    sum = sum + (poly_pow(xm1, n - l) * poly_pow(xp1, l)).scaled(Rational(c * c));
  }
  return sum.scaled(Rational(Int(1), pow_int(Int(2), n)));
}

RatPoly shifted_legendre(unsigned long n, const Rational& r) {
  if (r <= 0) throw std::domain_error("shifted_legendre: need r > 0");
  RatPoly x = RatPoly::identity();
  RatPoly xmr(std::vector<Rational>{-r, Rational(1)});
  RatPoly sum;
  for (unsigned long l = 0; l <= n; ++l) {
    Int c = binomial(n, l);
    sum = sum + (poly_pow(x, l) * poly_pow(xmr, n - l)).scaled(Rational(c * c));
  }
  return sum.scaled(1 / pow_rational(r, static_cast<long>(n)));
}

RatPoly rodrigues_shifted(unsigned long n, const Rational& r) {
  if (r <= 0) throw std::domain_error("rodrigues_shifted: need r > 0");
  RatPoly x = RatPoly::identity();
  RatPoly xmr(std::vector<Rational>{-r, Rational(1)});
  RatPoly g = poly_pow(x * xmr, n);
  for (unsigned long i = 0; i < n; ++i) g = derivative(g);
  Rational scale =
      1 / (Rational(factorial(n)) * pow_rational(r, static_cast<long>(n)));
  return g.scaled(scale);
}

IntPoly scaled_integer_legendre(unsigned long n, unsigned long r) {
  if (r < 1) throw std::domain_error("scaled_integer_legendre: need r >= 1");
  RatPoly p = shifted_legendre(n, Rational(r))
                  .scaled(Rational(pow_int(Int(r), n)));
  return to_int_checked(p);
}

Rational inner_product(const RatPoly& f, const RatPoly& g, const Rational& r) {
  if (r <= 0) throw std::domain_error("inner_product: need r > 0");
  return integrate_poly_exact(f * g, Rational(0), r);
}

Enclosure coefficient_enclosure(unsigned long n, unsigned long r,
                                unsigned long q, const Rational& eps) {
  if (eps <= 0) throw std::domain_error("eps must be > 0");
  if (r < 1 || q < 1)
    throw std::domain_error("coefficient_enclosure: need r, q >= 1");
  RatPoly f = to_rat(scaled_integer_legendre(n, r));
  LinearFormExp form = exp_integral_exact(f, Rational(r));
  return form.enclose(eps / Rational(q)).scale(Rational(q));
}

Rational cbs_bound(unsigned long n, unsigned long r, unsigned long q) {
  if (r < 1 || q < 1) throw std::domain_error("cbs_bound: need r, q >= 1");
  if (n + 1 < 2 * r)
    throw std::domain_error("cbs_bound: requires n + 1 >= 2r");
  return Rational(2 * Int(q) * pow_int(Int(r), 2 * n + 1)) /
         Rational(factorial(n) * Int(2 * n + 1));
}

}  // namespace niven
