#include "es/search.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace es {

namespace {

// n below this bound keeps every intermediate of the window scan
// (den*y <= 2(nx)^2 <= 9n^4/8) inside 128 bits.
constexpr u64 kSmallN = u64{1} << 31;

// Per-x y ranges at most this long are scanned directly; longer ones go
// through the divisor stepping below.
constexpr u64 kNaiveSpan = 2048;

Natural nat_of(u128 v) { return Natural::from_u128(v); }
Natural nat_of(const mpz_class& v) { return Natural(v); }

template <class V>
struct ScanHit {
  SearchStatus status;
  V x{}, y{}, z{};
};

// The windowed scan as specified: x ascending over [floor(n/4)+1, floor(3n/4)],
// residual r = (4x-n)/(nx), y ascending over [max(x, floor(1/r)+1), floor(2/r)],
// hit iff (4xy - ny - nx) divides nxy with quotient z >= y. First hit is the
// lexicographic minimum.
template <class V>
ScanHit<V> scan_min(const V& n, u64 limit) {
  const V one(1), two(2), four(4);
  u64 steps = 0;
  V x_hi = (V(3) * n) / four;
  for (V x = n / four + one; x <= x_hi; x = x + one) {
    V num = four * x - n;
    if (num <= V(0)) continue;
    V den = n * x;
    V y_lo = den / num + one;
    if (y_lo < x) y_lo = x;
    V y_hi = (two * den) / num;
    for (V y = y_lo; y <= y_hi; y = y + one) {
      if (++steps > limit) return {SearchStatus::budget_exceeded};
      V d = num * y - den;
      V top = den * y;
      if (top % d == V(0)) {
        V z = top / d;
        if (z >= y) return {SearchStatus::found, x, y, z};
      }
    }
  }
  return {SearchStatus::exhausted_window};
}

template <class V>
std::vector<Triple> scan_all(const V& n, u64 cap) {
  std::vector<Triple> out;
  const V one(1), two(2), four(4);
  V x_hi = (V(3) * n) / four;
  for (V x = n / four + one; x <= x_hi; x = x + one) {
    V num = four * x - n;
    if (num <= V(0)) continue;
    V den = n * x;
    V y_lo = den / num + one;
    if (y_lo < x) y_lo = x;
    V y_hi = (two * den) / num;
    for (V y = y_lo; y <= y_hi; y = y + one) {
      V d = num * y - den;
      V top = den * y;
      if (top % d == V(0)) {
        V z = top / d;
        if (z >= y) {
          out.push_back({nat_of(x), nat_of(y), nat_of(z)});
          if (cap != 0 && out.size() == cap) return out;
        }
      }
    }
  }
  return out;
}

void factorize_u64(u64 v, std::vector<std::pair<u64, int>>& out) {
  out.clear();
  if (v % 2 == 0) {
    int e = 0;
    while (v % 2 == 0) { v /= 2; ++e; }
    out.emplace_back(2, e);
  }
  for (u64 p = 3; p * p <= v; p += 2) {
    if (v % p == 0) {
      int e = 0;
      while (v % p == 0) { v /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (v > 1) out.emplace_back(v, 1);
}

// Smallest divisor d of q^2 with dmin <= d <= q and d ≡ rc (mod p), or 0 if
// none exists. q_factors is the factorization of q (so q^2 doubles the
// exponents). Every candidate generated counts against the step budget.
u64 min_divisor_in_class(const std::vector<std::pair<u64, int>>& q_factors, u64 q, u64 dmin,
                         u64 p, u64 rc, u64& steps, u64 limit, bool& over_budget) {
  std::vector<u64> divs{1};
  for (auto [pr, e] : q_factors) {
    size_t old = divs.size();
    u64 pk = 1;
    for (int i = 1; i <= 2 * e; ++i) {
      if (pk > q / pr) break;
      pk *= pr;
      for (size_t j = 0; j < old; ++j) {
        if (divs[j] <= q / pk) divs.push_back(divs[j] * pk);
      }
    }
  }
  steps += divs.size();
  if (steps > limit) {
    over_budget = true;
    return 0;
  }
  u64 best = 0;
  for (u64 d : divs)
    if (d >= dmin && d % p == rc && (best == 0 || d < best)) best = d;
  return best;
}

struct HybridHit {
  SearchStatus status;
  TripleU128 t{};
};

// Same scan as scan_min, but when a y range is long the inner loop is
// replaced by stepping d = py - q through the divisors of q^2 (p/q the
// reduced residual): d hits exactly when it divides q^2 and lies in the
// class -q mod p, which is the scan's divisibility condition after
// cancelling gcd(4x-n, nx). Picking the smallest valid d picks the same y
// the scan would find first.
HybridHit hybrid_min(u64 n, u64 limit) {
  assert(n >= 2 && n <= kSmallN);
  u64 steps = 0;
  std::vector<std::pair<u64, int>> n_factors, x_factors, g_factors, q_factors;
  factorize_u64(n, n_factors);
  const u64 x_hi = 3 * n / 4;
  for (u64 x = n / 4 + 1; x <= x_hi; ++x) {
    const u64 num = 4 * x - n;
    const u128 den = static_cast<u128>(n) * x;
    u128 y_lo = den / num + 1;
    if (y_lo < x) y_lo = x;
    const u128 y_hi = 2 * den / num;
    if (y_hi < y_lo) continue;
    if (y_hi - y_lo <= kNaiveSpan) {
      for (u128 y = y_lo; y <= y_hi; ++y) {
        if (++steps > limit) return {SearchStatus::budget_exceeded};
        u128 d = static_cast<u128>(num) * y - den;
        u128 top = den * y;
        if (top % d == 0) {
          u128 z = top / d;
          if (z >= y) return {SearchStatus::found, {x, y, z}};
        }
      }
      continue;
    }

    const u64 g = std::gcd(num, static_cast<u64>(den % num));
    const u64 p = num / g;
    const u64 q = static_cast<u64>(den / g);

    // factorization of q = n*x/g assembled from the pieces
    factorize_u64(x, x_factors);
    q_factors = n_factors;
    q_factors.insert(q_factors.end(), x_factors.begin(), x_factors.end());
    std::sort(q_factors.begin(), q_factors.end());
    for (size_t i = 1; i < q_factors.size(); ++i) {
      if (q_factors[i].first == q_factors[i - 1].first) {
        q_factors[i - 1].second += q_factors[i].second;
        q_factors.erase(q_factors.begin() + static_cast<long>(i));
        --i;
      }
    }
    if (g > 1) {
      factorize_u64(g, g_factors);
      for (auto [pr, e] : g_factors)
        for (auto& m : q_factors)
          if (m.first == pr) {
            m.second -= e;
            break;
          }
      std::erase_if(q_factors, [](const auto& m) { return m.second <= 0; });
    }

    const u64 rc = (p - q % p) % p;  // d ≡ -q (mod p)
    const u64 dmin = (y_lo * p > q) ? static_cast<u64>(y_lo * p - q) : 1;
    bool over_budget = false;
    const u64 d = min_divisor_in_class(q_factors, q, dmin, p, rc, steps, limit, over_budget);
    if (over_budget) return {SearchStatus::budget_exceeded};
    if (d != 0) {
      u128 y = (static_cast<u128>(q) + d) / p;
      u128 z = (static_cast<u128>(q) + static_cast<u128>(q) * q / d) / p;
      return {SearchStatus::found, {x, y, z}};
    }
  }
  return {SearchStatus::exhausted_window};
}

u64 budget_limit(const SearchBudget& b) {
  return b.max_steps.value_or(std::numeric_limits<u64>::max());
}

void require_domain(const Natural& n) {
  if (n < Natural(2)) throw std::domain_error("search requires n >= 2");
}

}  // namespace

SearchWindow SearchWindow::of(const Natural& n) {
  return {n / Natural(4) + Natural(1), Natural(3) * n / Natural(4)};
}

std::optional<SearchWindow::YRange> SearchWindow::y_range(const Natural& n, const Natural& x) {
  Natural four_x = Natural(4) * x;
  if (four_x <= n) return std::nullopt;
  Natural num = four_x.checked_sub(n);
  Natural den = n * x;
  Natural lo = den / num + Natural(1);
  if (lo < x) lo = x;
  Natural hi = Natural(2) * den / num;
  if (hi < lo) return std::nullopt;
  return YRange{lo, hi};
}

SearchOutcome search_min(const Natural& n, SearchBudget budget) {
  require_domain(n);
  if (auto w = n.narrow(); w && *w <= kSmallN) {
    HybridHit h = hybrid_min(static_cast<u64>(*w), budget_limit(budget));
    if (h.status != SearchStatus::found) return {h.status, std::nullopt};
    return {SearchStatus::found, widen(h.t)};
  }
  ScanHit<mpz_class> h = scan_min(n.mpz(), budget_limit(budget));
  if (h.status != SearchStatus::found) return {h.status, std::nullopt};
  return {SearchStatus::found, Triple{nat_of(h.x), nat_of(h.y), nat_of(h.z)}};
}

SearchOutcome search_min_reference(const Natural& n, SearchBudget budget) {
  require_domain(n);
  if (auto w = n.narrow(); w && *w <= kSmallN) {
    ScanHit<u128> h = scan_min(*w, budget_limit(budget));
    if (h.status != SearchStatus::found) return {h.status, std::nullopt};
    return {SearchStatus::found, Triple{nat_of(h.x), nat_of(h.y), nat_of(h.z)}};
  }
  ScanHit<mpz_class> h = scan_min(n.mpz(), budget_limit(budget));
  if (h.status != SearchStatus::found) return {h.status, std::nullopt};
  return {SearchStatus::found, Triple{nat_of(h.x), nat_of(h.y), nat_of(h.z)}};
}

std::vector<Triple> search_all(const Natural& n, u64 cap) {
  require_domain(n);
  if (auto w = n.narrow(); w && *w <= kSmallN) return scan_all(*w, cap);
  return scan_all(n.mpz(), cap);
}

std::optional<TripleU128> search_min_u64(u64 n) {
  if (n < 2 || n > kSmallN) throw std::domain_error("search_min_u64 requires 2 <= n <= 2^31");
  HybridHit h = hybrid_min(n, std::numeric_limits<u64>::max());
  if (h.status != SearchStatus::found) return std::nullopt;
  return h.t;
}

}  // namespace es
