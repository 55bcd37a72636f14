#include "es/natural.hpp"

#include <stdexcept>

namespace es {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 0;
  while (v > 0) {
    buf[pos++] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  std::string out;
  out.reserve(pos);
  while (pos > 0) out += buf[--pos];
  return out;
}

Natural::Natural(const mpz_class& v) : v_(v) {
  if (mpz_sgn(v_.get_mpz_t()) < 0)
    throw std::domain_error("Natural cannot hold a negative value");
}

Natural Natural::from_u128(u128 v) {
  Natural n;
  mpz_class hi(static_cast<unsigned long>(v >> 64));
  mpz_class lo(static_cast<unsigned long>(v));
  n.v_ = (hi << 64) + lo;
  return n;
}

std::optional<Natural> Natural::from_decimal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (c < '0' || c > '9') return std::nullopt;
  Natural n;
  if (mpz_set_str(n.v_.get_mpz_t(), text.c_str(), 10) != 0) return std::nullopt;
  return n;
}

Natural Natural::checked_sub(const Natural& o) const {
  if (o.v_ > v_) throw std::underflow_error("Natural subtraction underflow");
  return Natural(mpz_class(v_ - o.v_));
}

std::pair<Natural, Natural> Natural::divmod(const Natural& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Natural q, r;
  mpz_fdiv_qr(q.v_.get_mpz_t(), r.v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return {q, r};
}

u64 Natural::mod_u64(u64 m) const {
  if (m == 0) throw std::domain_error("division by zero");
  return mpz_fdiv_ui(v_.get_mpz_t(), static_cast<unsigned long>(m));
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural g;
  mpz_gcd(g.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return g;
}

u64 Natural::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Natural does not fit in 64 bits");
  return mpz_get_ui(v_.get_mpz_t());
}

std::optional<u128> Natural::narrow() const {
  if (is_zero()) return u128{0};
  if (mpz_sizeinbase(v_.get_mpz_t(), 2) > 128) return std::nullopt;
  mpz_class hi, lo;
  mpz_fdiv_q_2exp(hi.get_mpz_t(), v_.get_mpz_t(), 64);
  mpz_fdiv_r_2exp(lo.get_mpz_t(), v_.get_mpz_t(), 64);
  return (static_cast<u128>(mpz_get_ui(hi.get_mpz_t())) << 64) | mpz_get_ui(lo.get_mpz_t());
}

}  // namespace es
