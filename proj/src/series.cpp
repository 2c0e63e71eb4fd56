#include "niven/series.hpp"

#include <cmath>

#include "niven/detail/binary_splitting.hpp"

namespace niven {

namespace detail {

BsNode split_range(unsigned long lo, unsigned long hi, const RatioFn& ratio) {
  if (hi - lo == 1) {
    BsNode n;
    ratio(lo, n.P, n.Q);
    n.T = n.P;
    return n;
  }
  unsigned long mid = lo + (hi - lo) / 2;
  BsNode l = split_range(lo, mid, ratio);
  BsNode r = split_range(mid, hi, ratio);
  BsNode out;
  out.P = l.P * r.P;
  out.Q = l.Q * r.Q;
  out.T = l.T * r.Q + l.P * r.T;
  return out;
}

RawFraction series_sum(const Int& t0n, const Int& t0d, unsigned long terms,
                       const RatioFn& ratio) {
  if (terms == 0) return {Int(0), Int(1)};
  if (terms == 1) return {t0n, t0d};
  BsNode n = split_range(0, terms - 1, ratio);
  return {t0n * (n.Q + n.T), t0d * n.Q};
}

double log2_int(const Int& z) {
  long e;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

double log2_rat(const Rational& r) {
  return log2_int(r.get_num()) - log2_int(r.get_den());
}

Rational grid_floor(const Int& num, const Int& den, const Int& grid) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), Int(num * grid).get_mpz_t(), den.get_mpz_t());
  return make_rational(q, grid);
}

Rational grid_ceil(const Int& num, const Int& den, const Int& grid) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), Int(num * grid).get_mpz_t(), den.get_mpz_t());
  return make_rational(q, grid);
}

Int grid_denominator(const Rational& eps) {
  Int t;
  mpz_cdiv_q(t.get_mpz_t(), Int(4 * eps.get_den()).get_mpz_t(),
             eps.get_num().get_mpz_t());
  if (t <= 1) return Int(1);
  std::size_t s = mpz_sizeinbase(t.get_mpz_t(), 10);
  Int p = pow_int(Int(10), s - 1);
  return p >= t ? p : Int(p * 10);
}

}  // namespace detail

namespace {

using detail::grid_ceil;
using detail::grid_floor;
using detail::log2_int;
using detail::log2_rat;
using detail::RawFraction;

using detail::grid_denominator;

void require_positive_eps(const Rational& eps) {
  if (eps <= 0) throw std::domain_error("eps must be > 0");
}

// log2 of the float-scan safety margin; the exact comparison below is
// authoritative, the float scan only picks the starting index.
constexpr double kScanMarginBits = 40.0;

// True iff mult * |x|^m / m_factorial <= eps, exactly.
bool term_below(const Int& absp, const Int& q, unsigned long m,
                const Int& m_factorial, unsigned mult, const Rational& eps) {
  Int lhs = mult * pow_int(absp, m) * eps.get_den();
  Int rhs = eps.get_num() * pow_int(q, m) * m_factorial;
  return lhs <= rhs;
}

Enclosure bracket_enclosure(const RawFraction& s, const Int& tn, const Int& td,
                            const Int& grid) {
  // endpoints s and s + tn/td, outward-rounded
  Int e2n = s.num * td + tn * s.den;
  Int e2d = s.den * td;
  if (tn >= 0)
    return Enclosure(grid_floor(s.num, s.den, grid), grid_ceil(e2n, e2d, grid));
  return Enclosure(grid_floor(e2n, e2d, grid), grid_ceil(s.num, s.den, grid));
}

}  // namespace

Enclosure enclose_exp(const Rational& x, const Rational& eps) {
  require_positive_eps(eps);
  if (x == 0) return Enclosure(Rational(1));
  const Int p = x.get_num(), q = x.get_den();
  const Int absp = abs(p);
  Int grid = grid_denominator(eps);

  // |x|/(K+2) <= 1/4 so the geometric tail is <= 2*|t_{K+1}|
  unsigned long K = 0;
  while (Int((K + 2) * q) < 4 * absp) ++K;

  // need 4|t_{K+1}| = 4|x|^{K+1}/(K+1)! <= eps/2, leaving eps/2 of the
  // width budget to the outward grid rounding
  const double lx = log2_rat(x < 0 ? Rational(-x) : x);
  const double target = log2_rat(eps) - 3.0;
  const double ln2 = std::log(2.0);
  while ((K + 1) * lx - std::lgamma(static_cast<double>(K) + 2.0) / ln2 >
         target + kScanMarginBits)
    ++K;
  while (!term_below(absp, q, K + 1, factorial(K + 1), 8, eps)) ++K;

  RawFraction s = detail::series_sum(
      Int(1), Int(1), K + 1, [&](unsigned long l, Int& n, Int& d) {
        n = p;
        d = q * Int(l + 1);
      });
  // symmetric interval [S - 2|t|, S + 2|t|]
  Int tn = 2 * pow_int(absp, K + 1);
  Int td = pow_int(q, K + 1) * factorial(K + 1);
  Int lon = s.num * td - tn * s.den;
  Int hin = s.num * td + tn * s.den;
  Int den = s.den * td;
  return Enclosure(grid_floor(lon, den, grid), grid_ceil(hin, den, grid));
}

namespace {

// Shared by sin and cos: alternating series with t_{K+1} given in closed
// form; partial sums S_K and S_{K+1} bracket the value once terms
// decrease, so the enclosure is the bracket pair, outward-rounded.
Enclosure alternating_enclosure(const Rational& x, const Rational& eps,
                                bool odd_series) {
  const Int p = x.get_num(), q = x.get_den();
  const Int absp = abs(p);
  const Int p2 = p * p, q2 = q * q;
  Int grid = grid_denominator(eps);

  // first index from which |t_{k+1}| < |t_k| for all later k
  unsigned long K = 0;
  auto decreasing_at = [&](unsigned long k) {
    unsigned long a = odd_series ? 2 * k + 2 : 2 * k + 1;
    return Int(Int(a) * Int(a + 1) * q2) > p2;
  };
  {
    double xd = std::fabs(mpq_get_d(x.get_mpq_t()));
    if (xd > 4.0) K = static_cast<unsigned long>(xd / 2.0);
    while (!decreasing_at(K)) ++K;
  }

  // omitted term degree: sin 2K+3, cos 2K+2; need |t_{K+1}| <= eps/2
  auto omitted_degree = [&](unsigned long k) { return odd_series ? 2 * k + 3 : 2 * k + 2; };
  const double lx = log2_rat(x < 0 ? Rational(-x) : x);
  const double target = log2_rat(eps) - 1.0;
  const double ln2 = std::log(2.0);
  while (true) {
    unsigned long m = omitted_degree(K);
    if (m * lx - std::lgamma(static_cast<double>(m) + 1.0) / ln2 <=
        target + kScanMarginBits)
      break;
    ++K;
  }
  while (!term_below(absp, q, omitted_degree(K), factorial(omitted_degree(K)),
                     2, eps))
    ++K;

  RawFraction s;
  if (odd_series) {
    s = detail::series_sum(p, q, K + 1, [&](unsigned long l, Int& n, Int& d) {
      n = -p2;
      d = q2 * Int(2 * l + 2) * Int(2 * l + 3);
    });
  } else {
    s = detail::series_sum(Int(1), Int(1), K + 1,
                           [&](unsigned long l, Int& n, Int& d) {
                             n = -p2;
                             d = q2 * Int(2 * l + 1) * Int(2 * l + 2);
                           });
  }
  unsigned long m = omitted_degree(K);
  Int tn = pow_int(p, m);  // sign of p for odd m
  if (K % 2 == 0) tn = -tn;
  Int td = pow_int(q, m) * factorial(m);
  return bracket_enclosure(s, tn, td, grid);
}

}  // namespace

Enclosure enclose_sin(const Rational& x, const Rational& eps) {
  require_positive_eps(eps);
  if (x == 0) return Enclosure(Rational(0));
  return alternating_enclosure(x, eps, /*odd_series=*/true);
}

Enclosure enclose_cos(const Rational& x, const Rational& eps) {
  require_positive_eps(eps);
  if (x == 0) return Enclosure(Rational(1));
  return alternating_enclosure(x, eps, /*odd_series=*/false);
}

Enclosure enclose_arctan(const Rational& x, const Rational& eps) {
  require_positive_eps(eps);
  if (x == 0) return Enclosure(Rational(0));
  const Int p = x.get_num(), q = x.get_den();
  const Int absp = abs(p);
  if (absp >= q) throw std::domain_error("enclose_arctan: requires |x| < 1");
  const Int p2 = p * p, q2 = q * q;
  Int grid = grid_denominator(eps);

  // |t_{K+1}| = |x|^{2K+3}/(2K+3) <= eps/2
  unsigned long K = 0;
  const double lx = log2_rat(x < 0 ? Rational(-x) : x);
  const double target = log2_rat(eps) - 1.0;
  while ((2.0 * K + 3.0) * lx - std::log2(2.0 * K + 3.0) >
         target + kScanMarginBits)
    ++K;
  auto omitted_below = [&](unsigned long k) {
    Int lhs = 2 * pow_int(absp, 2 * k + 3) * eps.get_den();
    Int rhs = eps.get_num() * pow_int(q, 2 * k + 3) * Int(2 * k + 3);
    return lhs <= rhs;
  };
  while (!omitted_below(K)) ++K;

  RawFraction s =
      detail::series_sum(p, q, K + 1, [&](unsigned long l, Int& n, Int& d) {
        n = -p2 * Int(2 * l + 1);
        d = q2 * Int(2 * l + 3);
      });
  Int tn = pow_int(p, 2 * K + 3);
  if (K % 2 == 0) tn = -tn;
  Int td = pow_int(q, 2 * K + 3) * Int(2 * K + 3);
  return bracket_enclosure(s, tn, td, grid);
}

Enclosure enclose_pi(const Rational& eps) {
  require_positive_eps(eps);
  Enclosure a5 = enclose_arctan(Rational(1, 5), eps / 64);
  Enclosure a239 = enclose_arctan(Rational(1, 239), eps / 16);
  return a5.scale(Rational(16)) - a239.scale(Rational(4));
}

}  // namespace niven
