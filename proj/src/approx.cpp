#include "niven/approx.hpp"

namespace niven {

namespace {

// F(0) and F(r) for f = x^n (r-x)^n, F = f_exp(f); exact integers.
std::pair<Int, Int> approximant_data(unsigned long r, unsigned long n) {
  IntPoly f = niven_poly(r, 1, n);
  IntPoly F = f_exp(f);
  return {eval_int(F, Int(0)), eval_int(F, Int(r))};
}

Int floor_rat(const Rational& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

}  // namespace

Rational er_convergent(unsigned long r, unsigned long n) {
  if (r < 1) throw std::domain_error("er_convergent: need r >= 1");
  auto [f0, fr] = approximant_data(r, n);
  if (fr == 0)
    throw std::domain_error("er_convergent: degenerate approximant, F(r) = 0");
  return make_rational(f0, fr);
}

std::vector<ConvergentRow> er_error_table(unsigned long r, unsigned long n_max,
                                          const Rational& eps) {
  if (r < 1) throw std::domain_error("er_error_table: need r >= 1");
  if (eps <= 0) throw std::domain_error("eps must be > 0");
  Enclosure er = enclose_exp(Rational(r), eps);
  std::vector<ConvergentRow> rows;
  rows.reserve(n_max + 1);
  for (unsigned long n = 0; n <= n_max; ++n) {
    auto [f0, fr] = approximant_data(r, n);
    if (fr == 0) {
      rows.push_back({n, Rational(0), Enclosure(Rational(0)), Rational(0),
                      /*degenerate=*/true});
      continue;
    }
    Rational approximant = make_rational(f0, fr);
    // |e^r - F(0)/F(r)| = |integral| / |F(r)| <= r^{2n+1} Ebar / |F(r)|
    Rational bound = Rational(pow_int(Int(r), 2 * n + 1)) * er.hi() /
                     rat_abs(Rational(fr));
    rows.push_back(
        {n, approximant, er - approximant, bound, /*degenerate=*/false});
  }
  return rows;
}

std::vector<Rational> cf_convergents(const Enclosure& x, unsigned long k) {
  if (k < 1) throw std::domain_error("cf_convergents: need k >= 1");
  std::vector<Rational> out;
  out.reserve(k);
  Rational lo = x.lo(), hi = x.hi();
  Int hm1(1), hm2(0), km1(0), km2(1);
  for (unsigned long i = 0; i < k; ++i) {
    Int alo = floor_rat(lo), ahi = floor_rat(hi);
    if (alo != ahi)
      throw indeterminate_error(
          "cf_convergents: enclosure straddles a floor boundary");
    Int h = alo * hm1 + hm2;
    Int kk = alo * km1 + km2;
    out.push_back(make_rational(h, kk));
    hm2 = hm1;
    hm1 = h;
    km2 = km1;
    km1 = kk;
    Rational flo = lo - Rational(alo);
    Rational fhi = hi - Rational(ahi);
    if (flo == 0 && fhi == 0) break;  // exact rational, expansion ends here
    if (flo == 0 || fhi == 0)
      throw indeterminate_error(
          "cf_convergents: enclosure touches a floor boundary");
    lo = 1 / fhi;
    hi = 1 / flo;
  }
  return out;
}

}  // namespace niven
