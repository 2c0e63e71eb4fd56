#include "niven/bigmath.hpp"

#include <cctype>
#include <sstream>

namespace niven {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long m, unsigned long n) {
  if (n > m) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), m, n);
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow_rational(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (x == 0) throw std::domain_error("pow_rational: 0 to negative power");
    return pow_rational(Rational(1) / x, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(),
             static_cast<unsigned long>(e));
  // powers of a canonical fraction are canonical
  return r;
}

namespace {

// Integer token: digits, optionally "base^exp" (e.g. "10^30").
Int parse_int_token(const std::string& s) {
  auto caret = s.find('^');
  if (caret != std::string::npos) {
    Int base(s.substr(0, caret), 10);  // base forced: no octal surprises
    unsigned long e = std::stoul(s.substr(caret + 1));
    return pow_int(base, e);
  }
  return Int(s, 10);
}

Rational parse_decimal_or_sci(const std::string& s) {
  // [sign] digits [. digits] [ (e|E) [sign] digits ]
  std::string mantissa = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    exp10 = std::stol(s.substr(epos + 1));
  }
  std::string digits;
  bool neg = false;
  std::size_t i = 0;
  if (i < mantissa.size() && (mantissa[i] == '+' || mantissa[i] == '-')) {
    neg = mantissa[i] == '-';
    ++i;
  }
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < mantissa.size(); ++i) {
    char ch = mantissa[i];
    if (ch == '.') {
      if (seen_dot) throw std::domain_error("bad rational literal: " + s);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      throw std::domain_error("bad rational literal: " + s);
    }
  }
  if (!seen_digit) throw std::domain_error("bad rational literal: " + s);
  Int num(digits.empty() ? std::string("0") : digits, 10);
  if (neg) num = -num;
  long e = exp10 - frac_digits;
  Int den(1);
  if (e >= 0)
    num *= pow_int(Int(10), static_cast<unsigned long>(e));
  else
    den = pow_int(Int(10), static_cast<unsigned long>(-e));
  return make_rational(num, den);
}

}  // namespace

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::domain_error("empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Int num = parse_int_token(s.substr(0, slash));
      Int den = parse_int_token(s.substr(slash + 1));
      if (den == 0) throw std::domain_error("zero denominator: " + s);
      return make_rational(num, den);
    }
    if (s.find_first_of(".eE") != std::string::npos)
      return parse_decimal_or_sci(s);
    return Rational(parse_int_token(s));
  } catch (const std::invalid_argument&) {
    throw std::domain_error("bad rational literal: " + s);
  }
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string decimal_string(const Rational& x, unsigned digits) {
  Int scale = pow_int(Int(10), digits);
  Int scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), Int(x.get_num() * scale).get_mpz_t(),
             x.get_den().get_mpz_t());
  bool neg = scaled < 0;
  std::string body = Int(abs(scaled)).get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

Rational floor_to_grid(const Rational& x, const Int& den) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), Int(x.get_num() * den).get_mpz_t(),
             x.get_den().get_mpz_t());
  return make_rational(q, den);
}

Rational ceil_to_grid(const Rational& x, const Int& den) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), Int(x.get_num() * den).get_mpz_t(),
             x.get_den().get_mpz_t());
  return make_rational(q, den);
}

}  // namespace niven
