#ifndef NIVEN_FOPERATOR_HPP
#define NIVEN_FOPERATOR_HPP

#include <utility>

#include "niven/poly.hpp"
#include "niven/series.hpp"

namespace niven {

/// The exact real number u*e^c + v, kept symbolic; numeric enclosures
/// are applied only at comparison time.
struct LinearFormExp {
  Rational u, v, c;
  /// Sound enclosure of the represented real, width <= eps.
  Enclosure enclose(const Rational& eps) const;
};

/// The exact real number s*sin c + t*cos c + w.
struct LinearFormTrig {
  Rational s, t, w, c;
  Enclosure enclose(const Rational& eps) const;
};

/// F = f - f' + f'' - f''' + ... (finite; deg f + 1 summands).
/// Satisfies F + F' = f.
RatPoly f_exp(const RatPoly& f);
IntPoly f_exp(const IntPoly& f);

/// F = f - f'' + f'''' - ... (even derivatives only).
/// Satisfies F + F'' = f.
RatPoly f_sin(const RatPoly& f);
IntPoly f_sin(const IntPoly& f);

/// Exact value of integral_0^c f(x) e^x dx as F(c) e^c - F(0).
LinearFormExp exp_integral_exact(const RatPoly& f, const Rational& c);

/// Exact value of integral_0^c f(x) sin x dx from the antiderivative
/// F'(x) sin x - F(x) cos x with F = f_sin(f):
/// value = F'(c) sin c - F(c) cos c + F(0).
LinearFormTrig sin_integral_exact(const RatPoly& f, const Rational& c);

/// With f = x^n (r-x)^n and F = f_exp(f): the integers F(0)/n! and
/// F(r)/n!. Throws defect_error if a division is not exact.
std::pair<Int, Int> corollary1_quantities(unsigned long r, unsigned long n);

/// With f = x^n (a-bx)^n and F = f_sin(f): the integers F(0)/n! and
/// b^n F(a/b)/n!.
std::pair<Int, Int> corollary2_quantities(unsigned long a, unsigned long b,
                                          unsigned long n);

enum class Kernel { exp, sin };

/// Independent route to the same integrals: truncate the kernel's Taylor
/// series, integrate the polynomial product exactly, and bound the
/// remainder by |integral of f * tail| <= c * max|f| * tailbound.
Enclosure enclose_integral_series(const RatPoly& f, const Rational& c,
                                  Kernel kind, const Rational& eps);

}  // namespace niven

#endif
