#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace es {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string to_string(u128 v);

/// Arbitrary-precision non-negative integer. Values are immutable once
/// constructed and canonical: equality is value equality. Subtraction is
/// checked; underflow throws (negatives are not representable anywhere in
/// this codebase).
class Natural {
 public:
  Natural() : v_(0) {}
  Natural(u64 v) : v_(static_cast<unsigned long>(v)) {}
  explicit Natural(const mpz_class& v);  // throws std::domain_error if v < 0

  static Natural from_u128(u128 v);
  /// Parses a decimal string; rejects empty strings, signs and non-digits.
  static std::optional<Natural> from_decimal(const std::string& text);

  Natural operator+(const Natural& o) const { return Natural(mpz_class(v_ + o.v_)); }
  Natural operator*(const Natural& o) const { return Natural(mpz_class(v_ * o.v_)); }

  /// a - b with underflow checked: throws std::underflow_error if b > a.
  Natural checked_sub(const Natural& o) const;

  /// Quotient and remainder (floor division); throws std::domain_error on
  /// zero divisor. Satisfies a = q*b + r with r < b.
  std::pair<Natural, Natural> divmod(const Natural& o) const;
  Natural operator/(const Natural& o) const { return divmod(o).first; }
  Natural operator%(const Natural& o) const { return divmod(o).second; }
  u64 mod_u64(u64 m) const;

  friend Natural gcd(const Natural& a, const Natural& b);

  bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
  bool fits_u64() const { return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }
  u64 to_u64() const;  // throws std::overflow_error if it does not fit

  /// The checked narrowing onto the 128-bit fast path: the value when it
  /// fits in an unsigned 128-bit word, absent otherwise.
  std::optional<u128> narrow() const;

  bool operator==(const Natural& o) const { return mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t()) == 0; }
  std::strong_ordering operator<=>(const Natural& o) const {
    int c = mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t());
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string str() const { return v_.get_str(); }
  const mpz_class& mpz() const { return v_; }

 private:
  mpz_class v_;
};

}  // namespace es
