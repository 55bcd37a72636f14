#include "es/families.hpp"

#include "es/search.hpp"

#include <cassert>
#include <stdexcept>

namespace es {

const char* family_name(Family f) {
  switch (f) {
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::Search: return "SEARCH";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (name == family_name(f)) return f;
  return std::nullopt;
}

LinearForm family_form(Family f) {
  switch (f) {
    case Family::A1: return {0, 4};
    case Family::A2: return {2, 4};
    case Family::B: return {3, 4};
    case Family::C: return {3, 6};
    case Family::D: return {5, 6};
    case Family::E: return {13, 24};
    case Family::Search: return {1, 24};
  }
  return {0, 0};
}

std::array<Natural, 3> Triple::sorted() const {
  std::array<Natural, 3> s = {x, y, z};
  if (s[1] < s[0]) std::swap(s[0], s[1]);
  if (s[2] < s[1]) std::swap(s[1], s[2]);
  if (s[1] < s[0]) std::swap(s[0], s[1]);
  return s;
}

std::string Triple::str() const {
  return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

namespace {

bool is_mordell_residue(u64 r840) {
  switch (r840) {
    case 1: case 121: case 169: case 289: case 361: case 529: return true;
    default: return false;
  }
}

// Dispatch on residues; returns the family plus the linear form already
// looked up. Shared by the Natural and u64 classifiers so the two cannot
// drift apart.
Family dispatch(u64 r4, u64 r6, u64 r24) {
  if (r4 == 0) return Family::A1;
  if (r4 == 2) return Family::A2;
  if (r4 == 3) return Family::B;
  if (r6 == 3) return Family::C;
  if (r6 == 5) return Family::D;
  if (r24 == 13) return Family::E;
  assert(r24 == 1);  // the remaining residues are exactly n ≡ 1 mod 24
  return Family::Search;
}

}  // namespace

ResidueClass classify(const Natural& n) {
  if (n < Natural(2)) throw std::domain_error("classify requires n >= 2");
  Family f = dispatch(n.mod_u64(4), n.mod_u64(6), n.mod_u64(24));
  LinearForm form = family_form(f);
  ResidueClass c;
  c.n = n;
  c.family = f;
  c.k = n.checked_sub(Natural(form.offset)) / Natural(form.stride);
  c.mordell_hard = is_mordell_residue(n.mod_u64(840));
  return c;
}

ResidueClassU64 classify_u64(u64 n) {
  if (n < 2) throw std::domain_error("classify requires n >= 2");
  Family f = dispatch(n % 4, n % 6, n % 24);
  LinearForm form = family_form(f);
  return {n, f, (n - form.offset) / form.stride, is_mordell_residue(n % 840)};
}

Triple construct(const ResidueClass& c) {
  const Natural& k = c.k;
  Natural one(1), two(2);
  switch (c.family) {
    case Family::A1: {
      if (k.is_zero()) throw std::invalid_argument("A1 with k=0 (n=0) is out of domain");
      Natural x = two * k, y = Natural(4) * k;
      return {x, y, y};
    }
    case Family::A2: {
      Natural x = two * k + one, y = Natural(4) * k + two;
      return {x, y, y};
    }
    case Family::B: {
      Natural x = two * k + two;
      Natural z = (k + one) * (Natural(4) * k + Natural(3));
      return {x, x, z};
    }
    case Family::C: {
      Natural x = Natural(6) * k + Natural(3), y = two * k + two;
      Natural z = (two * k + one) * y;
      return {x, y, z};
    }
    case Family::D: {
      Natural x = Natural(6) * k + Natural(5), y = two * k + two;
      Natural z = x * y;
      return {x, y, z};
    }
    case Family::E: {
      Natural x = two * (k + one) * (Natural(24) * k + Natural(13));
      Natural y = two * (Natural(3) * k + two);
      Natural z = x * (Natural(3) * k + two);
      return {x, y, z};
    }
    case Family::Search:
      throw std::invalid_argument("no closed form for n ≡ 1 mod 24");
  }
  throw std::invalid_argument("unknown family");
}

TripleU128 construct_u128(const ResidueClassU64& c) {
  assert(c.n <= (u64{1} << 32));
  u128 k = c.k;
  switch (c.family) {
    case Family::A1:
      if (k == 0) throw std::invalid_argument("A1 with k=0 (n=0) is out of domain");
      return {2 * k, 4 * k, 4 * k};
    case Family::A2:
      return {2 * k + 1, 4 * k + 2, 4 * k + 2};
    case Family::B:
      return {2 * k + 2, 2 * k + 2, (k + 1) * (4 * k + 3)};
    case Family::C:
      return {6 * k + 3, 2 * k + 2, (2 * k + 1) * (2 * k + 2)};
    case Family::D:
      return {6 * k + 5, 2 * k + 2, (6 * k + 5) * (2 * k + 2)};
    case Family::E: {
      u128 x = 2 * (k + 1) * (24 * k + 13);
      return {x, 2 * (3 * k + 2), x * (3 * k + 2)};
    }
    case Family::Search:
      throw std::invalid_argument("no closed form for n ≡ 1 mod 24");
  }
  throw std::invalid_argument("unknown family");
}

Triple widen(const TripleU128& t) {
  return {Natural::from_u128(t.x), Natural::from_u128(t.y), Natural::from_u128(t.z)};
}

SolveResult solve(const Natural& n, SearchBudget budget) {
  ResidueClass c = classify(n);
  SolveResult r;
  r.family = c.family;
  r.mordell_hard = c.mordell_hard;
  if (c.family != Family::Search) {
    r.status = SearchStatus::found;
    r.triple = construct(c);
    return r;
  }
  SearchOutcome s = search_min(n, budget);
  r.status = s.status;
  r.triple = s.triple;
  return r;
}

}  // namespace es
