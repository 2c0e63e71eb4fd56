#ifndef NIVEN_LEGENDRE_HPP
#define NIVEN_LEGENDRE_HPP

#include "niven/foperator.hpp"
#include "niven/poly.hpp"

namespace niven {

/// P_n on [-1,1] from the sum formula
/// P_n(x) = 2^{-n} sum_l C(n,l)^2 (x-1)^{n-l} (x+1)^l.
RatPoly legendre_sum_formula(unsigned long n);

/// Shifted Legendre polynomial on [0,r]:
/// P_n(2x/r - 1) = (1/r^n) sum_l C(n,l)^2 x^l (x-r)^{n-l}.
RatPoly shifted_legendre(unsigned long n, const Rational& r);

/// Same polynomial via the Rodrigues construction
/// (1/(n! r^n)) d^n/dx^n (x^n (x-r)^n).
RatPoly rodrigues_shifted(unsigned long n, const Rational& r);

/// r^n * shifted_legendre(n, r) for integer r; all-integer coefficients
/// (throws defect_error otherwise).
IntPoly scaled_integer_legendre(unsigned long n, unsigned long r);

/// Exact integral of f*g over [0, r].
Rational inner_product(const RatPoly& f, const RatPoly& g, const Rational& r);

/// Enclosure of r^n q integral_0^r P~_n(x) e^x dx, width <= eps, from the
/// exact linear form with f = r^n P~_n.
Enclosure coefficient_enclosure(unsigned long n, unsigned long r,
                                unsigned long q, const Rational& eps);

/// The Cauchy-Bunyakovsky-Schwarz coefficient bound 2 q r^{2n+1}/(n!(2n+1)).
/// Valid only for n + 1 >= 2r, which keeps the truncated-exponential
/// estimate 2x^n/n! applicable on [0,r]; outside that domain this throws.
Rational cbs_bound(unsigned long n, unsigned long r, unsigned long q);

}  // namespace niven

#endif
