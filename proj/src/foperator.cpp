#include "niven/foperator.hpp"

namespace niven {

namespace {

template <class P>
P alternating_derivative_sum(const P& f, unsigned step) {
  P total;
  P g = f;
  bool negate = false;
  while (!g.is_zero()) {
    total = negate ? total - g : total + g;
    for (unsigned i = 0; i < step; ++i) g = derivative(g);
    negate = !negate;
  }
  return total;
}

Int exact_quotient(const Int& num, const Int& den, const char* what) {
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  if (rem != 0) throw defect_error(std::string(what) + ": inexact division");
  return quot;
}

}  // namespace

RatPoly f_exp(const RatPoly& f) { return alternating_derivative_sum(f, 1); }
IntPoly f_exp(const IntPoly& f) { return alternating_derivative_sum(f, 1); }
RatPoly f_sin(const RatPoly& f) { return alternating_derivative_sum(f, 2); }
IntPoly f_sin(const IntPoly& f) { return alternating_derivative_sum(f, 2); }

Enclosure LinearFormExp::enclose(const Rational& eps) const {
  if (eps <= 0) throw std::domain_error("eps must be > 0");
  Enclosure e = enclose_exp(c, eps / (rat_abs(u) + 1));
  return e.scale(u) + v;
}

Enclosure LinearFormTrig::enclose(const Rational& eps) const {
  if (eps <= 0) throw std::domain_error("eps must be > 0");
  Enclosure es = enclose_sin(c, eps / (2 * (rat_abs(s) + 1)));
  Enclosure ec = enclose_cos(c, eps / (2 * (rat_abs(t) + 1)));
  return es.scale(s) + ec.scale(t) + w;
}

LinearFormExp exp_integral_exact(const RatPoly& f, const Rational& c) {
  RatPoly F = f_exp(f);
  return LinearFormExp{eval_rational(F, c), -F.coeff(0), c};
}

LinearFormTrig sin_integral_exact(const RatPoly& f, const Rational& c) {
  RatPoly F = f_sin(f);
  RatPoly Fp = derivative(F);
  return LinearFormTrig{eval_rational(Fp, c), -eval_rational(F, c), F.coeff(0),
                        c};
}

std::pair<Int, Int> corollary1_quantities(unsigned long r, unsigned long n) {
  if (r < 1) throw std::domain_error("corollary1_quantities: need r >= 1");
  IntPoly F = f_exp(niven_poly(r, 1, n));
  Int nfact = factorial(n);
  Int F0 = exact_quotient(F.coeff(0), nfact, "corollary1 F(0)/n!");
  Int Fr = exact_quotient(eval_int(F, Int(r)), nfact, "corollary1 F(r)/n!");
  return {F0, Fr};
}

std::pair<Int, Int> corollary2_quantities(unsigned long a, unsigned long b,
                                          unsigned long n) {
  if (a < 1 || b < 1)
    throw std::domain_error("corollary2_quantities: need a, b >= 1");
  IntPoly F = f_sin(niven_poly(a, b, n));
  Int nfact = factorial(n);
  Int F0 = exact_quotient(F.coeff(0), nfact, "corollary2 F(0)/n!");
  Rational Fab = eval_rational(F, Rational(a, b));
  Rational scaled = Fab * Rational(pow_int(Int(b), n)) / Rational(nfact);
  if (scaled.get_den() != 1)
    throw defect_error("corollary2 b^n F(a/b)/n!: not an integer");
  return {F0, scaled.get_num()};
}

Enclosure enclose_integral_series(const RatPoly& f, const Rational& c,
                                  Kernel kind, const Rational& eps) {
  if (eps <= 0) throw std::domain_error("eps must be > 0");
  if (c < 0) throw std::domain_error("enclose_integral_series: need c >= 0");
  if (c == 0) return Enclosure(Rational(0));

  Rational max_f(0);  // sum of |coeff_i| c^i bounds |f| on [0, c]
  {
    Rational cpow(1);
    for (const auto& v : f.coefficients()) {
      max_f += rat_abs(v) * cpow;
      cpow *= c;
    }
  }
  Rational budget = eps / 2;

  unsigned long K = 0;
  std::vector<Rational> kernel;
  if (kind == Kernel::exp) {
    while (Rational(K + 2) < 4 * c) ++K;
    // tail(x) <= 2 c^{K+1}/(K+1)! on [0, c]
    Rational t = pow_rational(c, static_cast<long>(K + 1)) /
                 Rational(factorial(K + 1));
    while (!(c * max_f * 2 * t <= budget)) {
      ++K;
      t = t * c / Rational(K + 1);
    }
    kernel.resize(K + 1);
    Rational inv_fact(1);
    for (unsigned long k = 0; k <= K; ++k) {
      if (k > 0) inv_fact /= Rational(k);
      kernel[k] = inv_fact;
    }
  } else {
    while (!(Rational((2 * K + 2) * (2 * K + 3)) > c * c)) ++K;
    Rational t = pow_rational(c, static_cast<long>(2 * K + 3)) /
                 Rational(factorial(2 * K + 3));
    while (!(c * max_f * t <= budget)) {
      ++K;
      t = t * c * c / Rational(Int(2 * K + 2) * Int(2 * K + 3));
    }
    kernel.assign(2 * K + 2, Rational(0));
    Rational term(1);
    for (unsigned long k = 0; k <= K; ++k) {
      if (k == 0)
        term = Rational(1);
      else
        term = -term / Rational(Int(2 * k) * Int(2 * k + 1));
      kernel[2 * k + 1] = term;
    }
  }

  Rational integral =
      integrate_poly_exact(f * RatPoly(std::move(kernel)), Rational(0), c);
  return Enclosure(integral - budget, integral + budget);
}

}  // namespace niven
