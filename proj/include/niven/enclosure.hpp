#ifndef NIVEN_ENCLOSURE_HPP
#define NIVEN_ENCLOSURE_HPP

#include "niven/bigmath.hpp"

namespace niven {

/// Closed interval with rational endpoints, certified to contain a real
/// value. Every operation returns an interval containing the exact image
/// set; endpoints stay exact rationals, no floating point.
class Enclosure {
 public:
  Enclosure() : lo_(0), hi_(0) {}
  explicit Enclosure(Rational point) : lo_(point), hi_(std::move(point)) {}
  Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("Enclosure: lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& e) const {
    return lo_ <= e.lo_ && e.hi_ <= hi_;
  }
  bool intersects(const Enclosure& e) const {
    return lo_ <= e.hi_ && e.lo_ <= hi_;
  }
  Enclosure intersect(const Enclosure& e) const;

  bool strictly_positive() const { return lo_ > 0; }
  bool excludes_zero() const { return lo_ > 0 || hi_ < 0; }

  /// max(|lo|, |hi|): an upper bound on |x| for every x enclosed.
  Rational abs_upper() const;

  /// Widens to the enclosing interval with endpoints on the 1/den grid.
  Enclosure round_outward(const Int& den) const {
    return Enclosure(floor_to_grid(lo_, den), ceil_to_grid(hi_, den));
  }

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  Enclosure operator+(const Enclosure& o) const {
    return Enclosure(lo_ + o.lo_, hi_ + o.hi_);
  }
  Enclosure operator-(const Enclosure& o) const { return *this + (-o); }
  Enclosure operator*(const Enclosure& o) const;
  Enclosure operator+(const Rational& r) const {
    return Enclosure(lo_ + r, hi_ + r);
  }
  Enclosure operator-(const Rational& r) const { return *this + (-r); }

  /// Scalar multiple by an exact rational.
  Enclosure scale(const Rational& r) const {
    if (r >= 0) return Enclosure(lo_ * r, hi_ * r);
    return Enclosure(hi_ * r, lo_ * r);
  }

  /// x^n over the interval (exact image hull).
  Enclosure pow(unsigned long n) const;

  /// 1/x; requires 0 not in [lo, hi].
  Enclosure reciprocal() const;

  bool operator==(const Enclosure& o) const = default;

 private:
  Rational lo_, hi_;
};

}  // namespace niven

#endif
