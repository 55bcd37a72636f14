#include "es/identity.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace es {

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class Polynomial::eval(const mpz_class& k) const {
  mpz_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[static_cast<size_t>(d)];
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0) ? "+" : "-";
    else if (c < 0) out += "-";
    mpz_class a = abs(c);
    if (a != 1 || d == 0) out += a.get_str();
    if (d >= 1) out += "k";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

namespace {

// The formula table, one row per family, coefficients low degree first.
// Mirrors the closed forms the residue dispatcher constructs from:
//   A1: n=4k      x=2k              y=4k    z=4k
//   A2: n=4k+2    x=2k+1            y=4k+2  z=4k+2
//   B:  n=4k+3    x=2k+2            y=2k+2  z=(k+1)(4k+3)
//   C:  n=6k+3    x=6k+3            y=2k+2  z=(2k+1)(2k+2)
//   D:  n=6k+5    x=6k+5            y=2k+2  z=(6k+5)(2k+2)
//   E:  n=24k+13  x=2(k+1)(24k+13)  y=2(3k+2)  z=2(k+1)(24k+13)(3k+2)
const std::vector<FamilySpec>& table() {
  static const std::vector<FamilySpec> t = {
      {Family::A1, {0, 4}, {0, 2}, {0, 4}, {0, 4}},
      {Family::A2, {2, 4}, {1, 2}, {2, 4}, {2, 4}},
      {Family::B, {3, 4}, {2, 2}, {2, 2}, {3, 7, 4}},
      {Family::C, {3, 6}, {3, 6}, {2, 2}, {2, 6, 4}},
      {Family::D, {5, 6}, {5, 6}, {2, 2}, {10, 22, 12}},
      {Family::E, {13, 24}, {26, 74, 48}, {4, 6}, {52, 226, 318, 144}},
  };
  return t;
}

}  // namespace

const std::vector<FamilySpec>& builtin_specs() { return table(); }

const FamilySpec& builtin_spec(Family f) {
  for (const FamilySpec& s : table())
    if (s.id == f) return s;
  throw std::invalid_argument("no formula set for family SEARCH");
}

IdentityVerdict check_family(const FamilySpec& f) {
  Polynomial four({4});
  Polynomial residual =
      four * f.x * f.y * f.z - f.n * (f.y * f.z + f.x * f.z + f.x * f.y);
  return {residual.is_zero(), residual};
}

std::vector<std::pair<Family, IdentityVerdict>> check_all_builtin() {
  std::vector<std::pair<Family, IdentityVerdict>> out;
  for (const FamilySpec& s : builtin_specs()) out.emplace_back(s.id, check_family(s));
  return out;
}

namespace {

std::string coeff_list(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ",";
    out += p.coeffs()[i].get_str();
  }
  return out;
}

Polynomial parse_coeff_list(const std::string& field, int lineno) {
  std::vector<mpz_class> coeffs;
  std::string cur;
  std::istringstream in(field);
  while (std::getline(in, cur, ',')) {
    mpz_class c;
    if (cur.empty() || mpz_set_str(c.get_mpz_t(), cur.c_str(), 10) != 0)
      throw std::runtime_error("spec table line " + std::to_string(lineno) +
                               ": bad coefficient '" + cur + "'");
    coeffs.push_back(c);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

void write_spec_table(std::ostream& out) { write_spec_table(out, builtin_specs()); }

void write_spec_table(std::ostream& out, const std::vector<FamilySpec>& specs) {
  out << "# family formula table: <id> <n> <x> <y> <z>, coefficients low degree first\n";
  for (const FamilySpec& s : specs) {
    out << family_name(s.id) << ' ' << coeff_list(s.n) << ' ' << coeff_list(s.x) << ' '
        << coeff_list(s.y) << ' ' << coeff_list(s.z) << '\n';
  }
}

std::vector<FamilySpec> parse_spec_table(std::istream& in) {
  std::vector<FamilySpec> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string id, n, x, y, z;
    if (!(fields >> id >> n >> x >> y >> z))
      throw std::runtime_error("spec table line " + std::to_string(lineno) + ": expected 5 fields");
    auto fam = family_from_name(id);
    if (!fam) throw std::runtime_error("spec table line " + std::to_string(lineno) +
                                       ": unknown family '" + id + "'");
    out.push_back({*fam, parse_coeff_list(n, lineno), parse_coeff_list(x, lineno),
                   parse_coeff_list(y, lineno), parse_coeff_list(z, lineno)});
  }
  return out;
}

}  // namespace es
