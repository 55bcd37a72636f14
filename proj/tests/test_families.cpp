#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "es/families.hpp"
#include "es/verify.hpp"
#include "oracle.hpp"

#include <random>

using namespace es;

TEST_CASE("classification of the worked instances") {
  ResidueClass c = classify(Natural(4));
  CHECK(c.family == Family::A1);
  CHECK(c.k == Natural(1));
  CHECK(!c.mordell_hard);

  c = classify(Natural(13));
  CHECK(c.family == Family::E);
  CHECK(c.k == Natural(0));

  c = classify(Natural(841));  // 841 = 840 + 1 = 24*35 + 1
  CHECK(c.family == Family::Search);
  CHECK(c.k == Natural(35));
  CHECK(c.mordell_hard);

  c = classify(Natural(2));
  CHECK(c.family == Family::A2);
  CHECK(c.k == Natural(0));

  // 3 is both 4k+3 and 6k+3; the dispatch order picks B
  c = classify(Natural(3));
  CHECK(c.family == Family::B);
  CHECK(c.k == Natural(0));
}

TEST_CASE("classification rejects n below 2") {
  CHECK_THROWS_AS(classify(Natural(0)), std::domain_error);
  CHECK_THROWS_AS(classify(Natural(1)), std::domain_error);
  CHECK_THROWS_AS(classify_u64(1), std::domain_error);
}

TEST_CASE("closed forms of the worked instances") {
  CHECK(construct(classify(Natural(13))) == Triple{Natural(26), Natural(4), Natural(52)});
  CHECK(construct(classify(Natural(2))) == Triple{Natural(1), Natural(2), Natural(2)});
  CHECK(construct(classify(Natural(9))) == Triple{Natural(9), Natural(4), Natural(12)});
  CHECK(construct(classify(Natural(37))) == Triple{Natural(148), Natural(10), Natural(740)});
}

TEST_CASE("k = 0 is in-domain for every family except A1") {
  // the same formulas cover the smallest members with no special-casing
  CHECK(construct({Natural(2), Family::A2, Natural(0), false}) ==
        Triple{Natural(1), Natural(2), Natural(2)});
  CHECK(construct({Natural(3), Family::B, Natural(0), false}) ==
        Triple{Natural(2), Natural(2), Natural(3)});
  CHECK(construct({Natural(3), Family::C, Natural(0), false}) ==
        Triple{Natural(3), Natural(2), Natural(2)});
  CHECK(construct({Natural(5), Family::D, Natural(0), false}) ==
        Triple{Natural(5), Natural(2), Natural(10)});
  CHECK(construct({Natural(13), Family::E, Natural(0), false}) ==
        Triple{Natural(26), Natural(4), Natural(52)});
  CHECK(verify(Natural(3), Triple{Natural(2), Natural(2), Natural(3)}));
  CHECK(verify(Natural(3), Triple{Natural(3), Natural(2), Natural(2)}));
  CHECK(verify(Natural(5), Triple{Natural(5), Natural(2), Natural(10)}));
}

TEST_CASE("construct rejects the classes without a formula") {
  ResidueClass search_class = classify(Natural(25));
  CHECK_THROWS_AS(construct(search_class), std::invalid_argument);
  ResidueClass a1_zero{Natural(0), Family::A1, Natural(0), false};
  CHECK_THROWS_AS(construct(a1_zero), std::invalid_argument);
}

TEST_CASE("solve picks the family and the triple verifies") {
  SolveResult r = solve(Natural(7));
  CHECK(r.family == Family::B);
  CHECK(*r.triple == Triple{Natural(4), Natural(4), Natural(14)});

  r = solve(Natural(5));
  CHECK(r.family == Family::D);
  CHECK(*r.triple == Triple{Natural(5), Natural(2), Natural(10)});

  r = solve(Natural(25));
  CHECK(r.family == Family::Search);
  CHECK(*r.triple == Triple{Natural(7), Natural(60), Natural(2100)});

  r = solve(Natural(61));
  CHECK(r.family == Family::E);
  CHECK(*r.triple == Triple{Natural(366), Natural(16), Natural(2928)});

  for (u64 n : {7, 5, 25, 61}) {
    SolveResult s = solve(Natural(n));
    CHECK(verify(Natural(n), *s.triple));
    CHECK(es::testing::rational_route_verify(Natural(n), s.triple->x, s.triple->y, s.triple->z));
  }
}

TEST_CASE("solve handles a large family-E value") {
  Natural n = *Natural::from_decimal("100000000000000000000021");  // ≡ 13 (mod 24)
  CHECK(n.mod_u64(24) == 13);
  SolveResult r = solve(n);
  CHECK(r.family == Family::E);
  CHECK(verify(n, *r.triple));
}

TEST_CASE("classification is total with exact round trip on [2, 1e5]") {
  for (u64 n = 2; n <= 100000; ++n) {
    ResidueClassU64 c = classify_u64(n);
    LinearForm f = family_form(c.family);
    CHECK(f.stride * c.k + f.offset == n);
    // the search class is exactly n ≡ 1 mod 24
    CHECK((c.family == Family::Search) == (n % 24 == 1));
    // Mordell-hard values sit inside the search class
    if (c.mordell_hard) {
      CHECK(n % 24 == 1);
      CHECK(c.family == Family::Search);
    }
    u64 r840 = n % 840;
    bool expect_hard =
        r840 == 1 || r840 == 121 || r840 == 169 || r840 == 289 || r840 == 361 || r840 == 529;
    CHECK(c.mordell_hard == expect_hard);
  }
}

TEST_CASE("wide and narrow classifiers agree") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    u64 n = rng() % 100000000 + 2;
    ResidueClassU64 a = classify_u64(n);
    ResidueClass b = classify(Natural(n));
    CHECK(a.family == b.family);
    CHECK(Natural(a.k) == b.k);
    CHECK(a.mordell_hard == b.mordell_hard);
  }
}

TEST_CASE("every closed form on [2, 1e5] verifies exactly") {
  for (u64 n = 2; n <= 100000; ++n) {
    ResidueClassU64 c = classify_u64(n);
    if (c.family == Family::Search) continue;
    TripleU128 t = construct_u128(c);
    auto fast = verify_u128(n, t.x, t.y, t.z);
    bool ok = fast ? *fast : verify(Natural(n), widen(t));
    CHECK(ok);
  }
}

TEST_CASE("u128 and arbitrary-precision constructors agree") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    u64 n = rng() % 4000000000ull + 2;
    ResidueClassU64 c = classify_u64(n);
    if (c.family == Family::Search) continue;
    CHECK(widen(construct_u128(c)) == construct(classify(Natural(n))));
  }
}

TEST_CASE("sorted view orders the components") {
  Triple t{Natural(26), Natural(4), Natural(52)};
  auto s = t.sorted();
  CHECK(s[0] == Natural(4));
  CHECK(s[1] == Natural(26));
  CHECK(s[2] == Natural(52));
}

TEST_CASE("family names round trip") {
  for (Family f : kAllFamilies) CHECK(family_from_name(family_name(f)) == f);
  CHECK(!family_from_name("F"));
}
