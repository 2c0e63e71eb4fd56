#include "niven/poly.hpp"

namespace niven {

RatPoly to_rat(const IntPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

IntPoly to_int_checked(const RatPoly& f) {
  std::vector<Int> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) {
    if (v.get_den() != 1)
      throw defect_error("to_int_checked: non-integer coefficient " +
                         v.get_str());
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

IntPoly nth_derivative_div_factorial(const IntPoly& f, unsigned long n) {
  if (n == 0) return f;
  const auto& c = f.coefficients();
  if (c.size() <= n) return IntPoly();
  // coefficient of x^{m-n} is c_m * m!/((m-n)! n!) = c_m * C(m,n) * ... ;
  // computed as the n-fold derivative divided by n!, with exactness checked
  Int nfact = factorial(n);
  std::vector<Int> d(c.size() - n);
  for (std::size_t m = n; m < c.size(); ++m) {
    Int falling(1);  // m (m-1) ... (m-n+1)
    for (unsigned long i = 0; i < n; ++i) falling *= Int(m - i);
    Int num = c[m] * falling;
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                nfact.get_mpz_t());
    if (rem != 0)
      throw defect_error("nth_derivative_div_factorial: inexact division");
    d[m - n] = quot;
  }
  return IntPoly(std::move(d));
}

RatPoly affine_substitute(const RatPoly& f, const Rational& alpha,
                          const Rational& beta) {
  const auto& c = f.coefficients();
  RatPoly lin(std::vector<Rational>{beta, alpha});
  RatPoly r;
  for (std::size_t i = c.size(); i-- > 0;)
    r = r * lin + RatPoly::constant(c[i]);
  return r;
}

IntPoly niven_poly(unsigned long a, unsigned long b, unsigned long n) {
  if (a < 1 || b < 1) throw std::domain_error("niven_poly: need a, b >= 1");
  // (a - b x)^n = sum_l C(n,l) a^{n-l} (-b)^l x^l, then shift by x^n
  std::vector<Int> c(2 * n + 1, Int(0));
  for (unsigned long l = 0; l <= n; ++l) {
    Int term = binomial(n, l) * pow_int(Int(a), n - l) * pow_int(Int(b), l);
    if (l % 2 == 1) term = -term;
    c[n + l] = term;
  }
  return IntPoly(std::move(c));
}

Rational eval_rational(const RatPoly& f, const Rational& x) {
  Rational r(0);
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Rational eval_rational(const IntPoly& f, const Rational& x) {
  Rational r(0);
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + Rational(c[i]);
  return r;
}

Int eval_int(const IntPoly& f, const Int& x) {
  Int r(0);
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Enclosure eval_enclosure(const RatPoly& f, const Enclosure& x) {
  Enclosure r{Rational(0)};
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Rational integrate_poly_exact(const RatPoly& f, const Rational& lo,
                              const Rational& hi) {
  const auto& c = f.coefficients();
  std::vector<Rational> anti(c.size() + 1, Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k)
    anti[k + 1] = c[k] / Rational(k + 1);
  RatPoly F(std::move(anti));
  return eval_rational(F, hi) - eval_rational(F, lo);
}

}  // namespace niven
