#pragma once

#include "es/families.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

namespace es {

/// Univariate polynomial in k with signed arbitrary-precision coefficients,
/// low degree first, canonical (no trailing zero coefficients; the zero
/// polynomial is the empty list). Signed values exist only inside this
/// module: the identity residual needs subtraction.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(std::vector<mpz_class> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // zero -> -1
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class eval(const mpz_class& k) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;  // e.g. "4k^2+7k+3"

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// One family's formula set: n(k), x(k), y(k), z(k).
struct FamilySpec {
  Family id;
  Polynomial n, x, y, z;
};

struct IdentityVerdict {
  bool holds;
  Polynomial residual;  // zero iff holds
};

/// The six built-in formula sets (A1, A2, B, C, D, E) as a declarative
/// coefficient table.
const std::vector<FamilySpec>& builtin_specs();
const FamilySpec& builtin_spec(Family f);  // throws std::invalid_argument for Search

/// Residual R(k) = 4*X*Y*Z - N*(Y*Z + X*Z + X*Y), expanded symbolically.
/// R identically zero is equivalent to 1/x + 1/y + 1/z = 4/n for every k at
/// which all four quantities are positive.
IdentityVerdict check_family(const FamilySpec& f);
std::vector<std::pair<Family, IdentityVerdict>> check_all_builtin();

/// Text fixture, one family per line:
///   <id> <N coeffs> <X coeffs> <Y coeffs> <Z coeffs>
/// with each coefficient list comma-separated, low degree first, e.g.
///   B 3,4 2,2 2,2 3,7,4
void write_spec_table(std::ostream& out);
void write_spec_table(std::ostream& out, const std::vector<FamilySpec>& specs);
/// Parses the fixture format; throws std::runtime_error on malformed input.
std::vector<FamilySpec> parse_spec_table(std::istream& in);

}  // namespace es
