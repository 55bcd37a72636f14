#pragma once

#include "es/natural.hpp"

namespace es {

/// Exact non-negative rational. Always stored reduced (gcd(num, den) = 1,
/// zero is 0/1) so equality is a structural comparison. The denominator is
/// never zero.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Natural num, Natural den);  // reduces; throws std::domain_error if den = 0

  /// The unit fraction 1/m.
  static Rational unit(const Natural& m) { return Rational(Natural(1), m); }

  const Natural& num() const { return num_; }
  const Natural& den() const { return den_; }

  Rational operator+(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

  bool is_zero() const { return num_.is_zero(); }
  std::string str() const { return num_.str() + "/" + den_.str(); }

 private:
  Natural num_;
  Natural den_;
};

}  // namespace es
