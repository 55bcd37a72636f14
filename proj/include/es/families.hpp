#pragma once

#include "es/natural.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace es {

/// The residue families with a closed-form solution, plus SEARCH for the one
/// residue class (n ≡ 1 mod 24) that has none and is settled by enumeration.
enum class Family { A1, A2, B, C, D, E, Search };

inline constexpr std::array<Family, 7> kAllFamilies = {
    Family::A1, Family::A2, Family::B, Family::C, Family::D, Family::E, Family::Search};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// n = stride*k + offset, the linear form tying a family member to its
/// parameter k.
struct LinearForm {
  u64 offset;
  u64 stride;
};
LinearForm family_form(Family f);

struct ResidueClass {
  Natural n;
  Family family = Family::Search;
  Natural k;
  bool mordell_hard = false;  // n mod 840 in {1,121,169,289,361,529}
};

/// An ordered solution of 4/n = 1/x + 1/y + 1/z, kept in the order its
/// constructor produced (the formulas are not sorted); sorted() gives the
/// canonical ascending view for comparisons.
struct Triple {
  Natural x, y, z;

  std::array<Natural, 3> sorted() const;
  bool operator==(const Triple&) const = default;
  std::string str() const;
};

/// Total on n >= 2; throws std::domain_error below that. Dispatch priority:
/// A1, A2, B, C, D, E, SEARCH (evenness first, then n mod 4, n mod 6,
/// n mod 24; overlapping classes such as n=3 resolve to the earliest match).
ResidueClass classify(const Natural& n);

/// Evaluates the family formulas at c.k. Rejects SEARCH (no closed form) and
/// A1 with k=0 (n=0 is out of domain) with std::invalid_argument.
Triple construct(const ResidueClass& c);

enum class SearchStatus {
  found,
  exhausted_window,  // complete window held no solution: counterexample candidate
  budget_exceeded,   // caller's cap hit before the window was exhausted
};

struct SearchBudget {
  std::optional<u64> max_steps;  // inner candidate tests; nullopt = unbounded
};

struct SolveResult {
  SearchStatus status = SearchStatus::found;
  Family family = Family::Search;
  std::optional<Triple> triple;
  bool mordell_hard = false;
};

/// classify + construct, falling back to bounded search for n ≡ 1 mod 24.
SolveResult solve(const Natural& n, SearchBudget budget = {});

// ---- 64/128-bit hot-path variants (used by the range verifier) ----

struct ResidueClassU64 {
  u64 n;
  Family family;
  u64 k;
  bool mordell_hard;
};

struct TripleU128 {
  u128 x, y, z;
};

ResidueClassU64 classify_u64(u64 n);

/// Same formulas as construct(); requires n <= 2^32 so every component fits
/// in 128 bits.
TripleU128 construct_u128(const ResidueClassU64& c);

Triple widen(const TripleU128& t);

}  // namespace es
