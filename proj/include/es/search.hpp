#pragma once

#include "es/families.hpp"

#include <optional>
#include <vector>

namespace es {

/// The finite x interval any ordered solution x <= y <= z must occupy:
/// from 1/x < 4/n <= 3/x, x lies in [floor(n/4)+1, floor(3n/4)].
struct SearchWindow {
  Natural x_lo, x_hi;

  static SearchWindow of(const Natural& n);

  struct YRange {
    Natural lo, hi;  // inclusive
  };
  /// y bounds for a fixed x: residual r = (4x-n)/(nx) must satisfy
  /// 1/y < r <= 2/y, so y in [max(x, floor(1/r)+1), floor(2/r)].
  /// Absent when the range is empty.
  static std::optional<YRange> y_range(const Natural& n, const Natural& x);
};

struct SearchOutcome {
  SearchStatus status;
  std::optional<Triple> triple;
};

/// Lexicographically minimal (x, y, z) with x <= y <= z solving
/// 4/n = 1/x + 1/y + 1/z, or exhausted_window if the complete window holds
/// none. For each x ascending, y candidates are tested ascending; a y hits
/// iff d = 4xy - ny - nx divides nxy with quotient z >= y. Short y ranges
/// are scanned directly; long ones step d through the divisors of the
/// reduced residual's squared numerator, which visits the same hits in the
/// same order (see search_min_reference and the agreement tests).
SearchOutcome search_min(const Natural& n, SearchBudget budget = {});

/// Pure windowed scan, no divisor stepping. Kept as the slow reference the
/// production path is tested against; also the fallback for n too large for
/// the 128-bit fast path.
SearchOutcome search_min_reference(const Natural& n, SearchBudget budget = {});

/// All ordered solutions x <= y <= z in lexicographic order, truncated at
/// cap (cap = 0 means unbounded: the window makes the list finite).
std::vector<Triple> search_all(const Natural& n, u64 cap);

/// Hot-path variant for the range verifier; requires n <= 2^31.
std::optional<TripleU128> search_min_u64(u64 n);

}  // namespace es
