#include "es/rational.hpp"

#include <stdexcept>

namespace es {

Rational::Rational(Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational with zero denominator");
  if (num_.is_zero()) {
    den_ = Natural(1);
    return;
  }
  Natural g = gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

}  // namespace es
