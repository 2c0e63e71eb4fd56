#ifndef NIVEN_DETAIL_BINARY_SPLITTING_HPP
#define NIVEN_DETAIL_BINARY_SPLITTING_HPP

#include <functional>

#include "niven/bigmath.hpp"

namespace niven::detail {

// Product-tree accumulator for sums of the form
//   sum_{i=0}^{m} t_i   with   t_{i+1}/t_i = num(i)/den(i),
// the standard binary-splitting scheme for hypergeometric-style series.
struct BsNode {
  Int P;  // product of ratio numerators over the range
  Int Q;  // product of ratio denominators over the range
  Int T;  // sum_{i=lo+1}^{hi} prod_{l=lo}^{i-1} num(l)/den(l), times Q
};

using RatioFn = std::function<void(unsigned long, Int&, Int&)>;

// Combines ratio steps [lo, hi); requires hi > lo.
BsNode split_range(unsigned long lo, unsigned long hi, const RatioFn& ratio);

// Unreduced fraction; den kept positive.
struct RawFraction {
  Int num;
  Int den;
};

// sum_{i=0}^{terms-1} t_i as an unreduced fraction, given t_0 = t0n/t0d.
RawFraction series_sum(const Int& t0n, const Int& t0d, unsigned long terms,
                       const RatioFn& ratio);

double log2_int(const Int& z);
double log2_rat(const Rational& r);

Rational grid_floor(const Int& num, const Int& den, const Int& grid);
Rational grid_ceil(const Int& num, const Int& den, const Int& grid);

// Smallest power of ten 10^d with 1/10^d <= eps/4; exact, hence
// monotone in eps (finer eps always lands on a nested finer grid).
Int grid_denominator(const Rational& eps);

}  // namespace niven::detail

#endif
