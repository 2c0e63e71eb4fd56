#ifndef NIVEN_BIGMATH_HPP
#define NIVEN_BIGMATH_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace niven {

/// Arbitrary-precision integer. GMP-backed; all arithmetic is exact.
using Int = mpz_class;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (GMP keeps mpq values canonical).
using Rational = mpq_class;

/// Scan or precision cap exceeded (CLI exit code 3).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A "cannot happen" condition happened, e.g. a division that a proven
/// integrality statement guarantees to be exact left a remainder
/// (CLI exit code 5).
struct defect_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// The available precision does not determine the answer
/// (CLI exit code 4).
struct indeterminate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// n! exactly.
Int factorial(unsigned long n);

/// C(m,n) exactly; 0 when n > m.
Int binomial(unsigned long m, unsigned long n);

/// x^e for integer e; e < 0 requires x != 0.
Rational pow_rational(const Rational& x, long e);

Int pow_int(const Int& base, unsigned long e);

/// Parses "22/7", "-3", "0.25", "1e-30", "2.5e-3" and "1/10^30" style
/// strings into an exact rational. Throws std::domain_error on junk.
Rational parse_rational(const std::string& s);

/// Canonical fraction string, e.g. "22/7" or "3".
std::string to_string(const Rational& x);

/// Decimal rendering with the given number of fractional digits,
/// truncated toward zero. Display-only; never fed back into arithmetic.
std::string decimal_string(const Rational& x, unsigned digits);

inline Rational make_rational(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Largest multiple of 1/den that is <= x.
Rational floor_to_grid(const Rational& x, const Int& den);

/// Smallest multiple of 1/den that is >= x.
Rational ceil_to_grid(const Rational& x, const Int& den);

inline Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace niven

#endif
