#ifndef NIVEN_SERIES_HPP
#define NIVEN_SERIES_HPP

#include "niven/bigmath.hpp"
#include "niven/enclosure.hpp"

namespace niven {

/// Enclosure of e^x of width <= eps. Truncated Taylor series with a
/// geometric tail bound; the truncation index keeps |x|/(k+2) <= 1/4 so
/// the tail is dominated by twice its first term.
Enclosure enclose_exp(const Rational& x, const Rational& eps);

/// Enclosure of sin x (cos x) of width <= eps via the alternating series
/// with the first-omitted-term remainder bound. The truncation index is
/// always past the index at which terms start decreasing, so consecutive
/// partial sums bracket the value.
Enclosure enclose_sin(const Rational& x, const Rational& eps);
Enclosure enclose_cos(const Rational& x, const Rational& eps);

/// Enclosure of pi of width <= eps via the Machin formula
/// pi = 16 atan(1/5) - 4 atan(1/239).
Enclosure enclose_pi(const Rational& eps);

/// Enclosure of atan x for |x| < 1 (alternating series). Helper for
/// enclose_pi, exposed for testing.
Enclosure enclose_arctan(const Rational& x, const Rational& eps);

}  // namespace niven

#endif
