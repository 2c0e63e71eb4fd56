#ifndef NIVEN_POLY_HPP
#define NIVEN_POLY_HPP

#include <optional>
#include <vector>

#include "niven/bigmath.hpp"
#include "niven/enclosure.hpp"

namespace niven {

/// Dense univariate polynomial, coefficients low-to-high. Normalized:
/// no trailing zero coefficient; the zero polynomial is the empty list
/// and its degree is nullopt.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly monomial(T coeff, std::size_t deg) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = std::move(coeff);
    return Poly(std::move(c));
  }
  static Poly identity() { return monomial(T(1), 1); }  // the polynomial x

  const std::vector<T>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  Poly operator-() const {
    std::vector<T> c(c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }
  Poly operator+(const Poly& o) const {
    std::vector<T> c(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<T> c(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
  }
  Poly scaled(const T& s) const {
    std::vector<T> c(c_);
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rational>;

template <class T>
Poly<T> derivative(const Poly<T>& f) {
  const auto& c = f.coefficients();
  if (c.size() <= 1) return Poly<T>();
  std::vector<T> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * T(k);
  return Poly<T>(std::move(d));
}

template <class T>
Poly<T> poly_pow(const Poly<T>& f, unsigned long e) {
  Poly<T> r = Poly<T>::constant(T(1));
  for (unsigned long i = 0; i < e; ++i) r = r * f;
  return r;
}

RatPoly to_rat(const IntPoly& f);

/// Conversion that must be exact; throws defect_error on a non-integer
/// coefficient.
IntPoly to_int_checked(const RatPoly& f);

/// f^(n)/n!, exact; Lemma-1 division. Throws defect_error if any
/// coefficient division leaves a remainder (impossible for integer f).
IntPoly nth_derivative_div_factorial(const IntPoly& f, unsigned long n);

/// f(alpha*x + beta), expanded exactly (Horner in polynomial arithmetic).
RatPoly affine_substitute(const RatPoly& f, const Rational& alpha,
                          const Rational& beta);

/// x^n (a - b x)^n by binomial expansion of (a - b x)^n shifted by n.
IntPoly niven_poly(unsigned long a, unsigned long b, unsigned long n);

Rational eval_rational(const RatPoly& f, const Rational& x);
Rational eval_rational(const IntPoly& f, const Rational& x);
Int eval_int(const IntPoly& f, const Int& x);
Enclosure eval_enclosure(const RatPoly& f, const Enclosure& x);

/// Exact definite integral of f over [lo, hi] via termwise antiderivative.
Rational integrate_poly_exact(const RatPoly& f, const Rational& lo,
                              const Rational& hi);

}  // namespace niven

#endif
