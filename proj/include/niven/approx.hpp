#ifndef NIVEN_APPROX_HPP
#define NIVEN_APPROX_HPP

#include <vector>

#include "niven/foperator.hpp"

namespace niven {

/// One row of the e^r approximation table.
struct ConvergentRow {
  unsigned long n;
  Rational approximant;  // F(0)/F(r) for f = x^n (r-x)^n (zero if degenerate)
  Enclosure error;       // encloses e^r - approximant
  Rational bound;        // r^{2n+1} * Ebar / |F(r)|
  bool degenerate;       // F(r) = 0 for this n
};

/// The rational approximation F(0)/F(r) to e^r with f = x^n (r-x)^n and
/// F = f - f' + f'' - ...; exact and reduced. The unnormalized f is used
/// (no /n!): the ratio is invariant under scaling. Throws on the
/// degenerate case F(r) = 0.
Rational er_convergent(unsigned long r, unsigned long n);

/// Rows n = 0..n_max with error enclosures of width <= eps. Degenerate
/// rows are flagged in place, never omitted, so indices match n.
std::vector<ConvergentRow> er_error_table(unsigned long r, unsigned long n_max,
                                          const Rational& eps);

/// First k continued-fraction convergents of the real enclosed by x.
/// Exact rational point enclosures terminate early at the end of their
/// finite expansion. Throws indeterminate_error when the enclosure
/// straddles a floor boundary, leaving a digit undetermined.
std::vector<Rational> cf_convergents(const Enclosure& x, unsigned long k);

}  // namespace niven

#endif
