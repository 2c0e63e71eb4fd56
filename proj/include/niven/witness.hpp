#ifndef NIVEN_WITNESS_HPP
#define NIVEN_WITNESS_HPP

#include <optional>
#include <string>
#include <utility>

#include "niven/foperator.hpp"

namespace niven {

inline constexpr unsigned long kDefaultScanCap = 1000000;

enum class Verdict { falsified, indeterminate };

std::string to_string(Verdict v);

/// Machine-readable record of one witness computation: an exact integer
/// side, an enclosed real side, the bound the proof needs, and the
/// verdict. A "falsified" verdict certifies that the candidate rational
/// cannot equal the constant in question.
struct Certificate {
  std::string kind;    // "fourier-e" | "niven-pi"
  Rational candidate;  // for fourier-e: the hypothesized denominator q
  std::optional<unsigned long> n;
  Int integer_side;
  Enclosure enclosed_side;
  Rational bound;
  Verdict verdict;
  Rational precision;
};

/// Fourier's engine: with S = q! sum_{k<=q} 1/k! (exact integer), the
/// remainder T = q!*e - S is enclosed and certified to lie in (0, 1/q].
/// No integer p can then satisfy q!*p/q - S = T, so e != p/q for this q.
Certificate fourier_witness(unsigned long q, const Rational& eps);

/// The naive geometric-series bound r^{q+1}/(q+1-r) on the scaled tail
/// of the e^r series, and whether it fails to be < 1. Documents why the
/// direct attack on e^r stalls for r > 1. Requires q + 1 > r (the
/// comparison series diverges otherwise).
std::pair<Rational, bool> naive_er_bound(unsigned long r, unsigned long q);

/// Exact rational upper bound q r^{2n+1} E/n! on the scaled integral,
/// with E a rational upper bound on e^r (enclosure endpoint).
Rational crude_bound_exp(unsigned long r, unsigned long q, unsigned long n);

/// Smallest n with the respective proof bound < 1, scanning upward from
/// the first valid n. Throws resource_error past the cap.
unsigned long minimal_n_exp(unsigned long r, unsigned long q,
                            unsigned long cap = kDefaultScanCap);
unsigned long minimal_n_pi(unsigned long a, unsigned long b,
                           unsigned long cap = kDefaultScanCap);
unsigned long minimal_n_cbs(unsigned long r, unsigned long q,
                            unsigned long cap = kDefaultScanCap);

/// Boundary data of the sine-kernel alternating-derivative sum for
/// f = x^n (a-bx)^n: returns (b^n F(0)/n!, b^n F'(0)/n!) as exact
/// integers, computed from the coefficient sums by binary splitting
/// (the polynomial F itself is never materialized; for the minimal n of
/// serious candidates it has hundreds of thousands of terms).
std::pair<Int, Int> niven_boundary_values(unsigned long a, unsigned long b,
                                          unsigned long n);

/// Niven's pi-candidate falsifier. integer_side is the exact integer
/// b^n (F(a/b) + F(0))/n!; enclosed_side encloses
/// (b^n/n!) integral_0^{a/b} x^n (a-bx)^n sin x dx. A falsified verdict
/// means the difference excludes 0 while the enclosed side lies in
/// (0,1): equality would be forced if a/b were pi, so a/b != pi.
/// When the enclosure alone cannot separate the tiny integral from 0,
/// it is intersected with an exact positivity lower bound obtained from
/// the integrand (positive on (0, pi), with the overshoot past pi
/// bounded through a pi enclosure).
Certificate niven_falsify(unsigned long a, unsigned long b,
                          std::optional<unsigned long> n, const Rational& eps,
                          unsigned long cap = kDefaultScanCap);

}  // namespace niven

#endif
