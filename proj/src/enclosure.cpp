#include "niven/enclosure.hpp"

#include <algorithm>

namespace niven {

Enclosure Enclosure::intersect(const Enclosure& e) const {
  if (!intersects(e)) throw defect_error("Enclosure::intersect: empty");
  return Enclosure(std::max(lo_, e.lo_), std::min(hi_, e.hi_));
}

Rational Enclosure::abs_upper() const {
  return std::max(rat_abs(lo_), rat_abs(hi_));
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  return Enclosure(std::min(std::min(a, b), std::min(c, d)),
                   std::max(std::max(a, b), std::max(c, d)));
}

Enclosure Enclosure::pow(unsigned long n) const {
  if (n == 0) return Enclosure(Rational(1));
  Rational pl = pow_rational(lo_, static_cast<long>(n));
  Rational ph = pow_rational(hi_, static_cast<long>(n));
  if (n % 2 == 1) return Enclosure(pl, ph);
  if (lo_ >= 0) return Enclosure(pl, ph);
  if (hi_ <= 0) return Enclosure(ph, pl);
  return Enclosure(Rational(0), std::max(pl, ph));  // straddles zero, even n
}

Enclosure Enclosure::reciprocal() const {
  if (contains(Rational(0)))
    throw std::domain_error("Enclosure::reciprocal: interval contains 0");
  return Enclosure(Rational(1) / hi_, Rational(1) / lo_);
}

}  // namespace niven
