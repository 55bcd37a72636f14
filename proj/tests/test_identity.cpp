#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "es/identity.hpp"
#include "es/verify.hpp"

#include <random>
#include <sstream>

using namespace es;

namespace {

std::mt19937_64 rng(0xc0ffee11u);

Polynomial random_poly(int max_degree) {
  int deg = static_cast<int>(rng() % (max_degree + 1));
  std::vector<mpz_class> coeffs;
  for (int i = 0; i <= deg; ++i) {
    mpz_class c(static_cast<unsigned long>(rng()));
    if (rng() & 1) c = -c;
    coeffs.push_back(c);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("product expansion of the factored middle step") {
  Polynomial a{2, 3};  // 3k+2
  Polynomial b{1, 1};  // k+1
  CHECK(a * b == Polynomial{2, 5, 3});  // 3k^2+5k+2
}

TEST_CASE("multiplicative identity and annihilator") {
  Polynomial p = random_poly(6);
  CHECK(p * Polynomial{1} == p);
  CHECK((p * Polynomial{}).is_zero());
  CHECK(Polynomial{0}.is_zero());
  CHECK(Polynomial{0, 0, 0}.is_zero());
}

TEST_CASE("all six built-in families hold identically") {
  auto results = check_all_builtin();
  REQUIRE(results.size() == 6);
  for (auto& entry : results) {
    INFO(family_name(entry.first));
    CHECK(entry.second.holds);
    CHECK(entry.second.residual.is_zero());
  }
}

TEST_CASE("single-family check and a perturbed spec") {
  CHECK(check_family(builtin_spec(Family::B)).holds);
  CHECK(check_family(builtin_spec(Family::E)).holds);

  FamilySpec broken = builtin_spec(Family::E);
  broken.z = broken.z + Polynomial{1};
  IdentityVerdict v = check_family(broken);
  CHECK(!v.holds);
  CHECK(v.residual.degree() >= 0);

  // a nonzero residual of degree d has at most d roots, so some k in
  // [0, deg] must expose a failing triple
  bool some_k_fails = false;
  for (int k = 0; k <= v.residual.degree(); ++k) {
    mpz_class kk(k);
    Natural n(broken.n.eval(kk)), x(broken.x.eval(kk)), y(broken.y.eval(kk)),
        z(broken.z.eval(kk));
    if (!verify(n, Triple{x, y, z})) {
      some_k_fails = true;
      break;
    }
  }
  CHECK(some_k_fails);
}

TEST_CASE("builtin spec lookup rejects the search class") {
  CHECK_THROWS_AS(builtin_spec(Family::Search), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
  for (int i = 0; i < 60; ++i) {
    Polynomial p = random_poly(8), q = random_poly(8), r = random_poly(8);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (int i = 0; i < 60; ++i) {
    Polynomial p = random_poly(6), q = random_poly(6);
    mpz_class k(static_cast<unsigned long>(rng() % 1000000));
    CHECK((p * q).eval(k) == p.eval(k) * q.eval(k));
    CHECK((p + q).eval(k) == p.eval(k) + q.eval(k));
  }
}

TEST_CASE("a holding identity means the numeric triples verify") {
  for (const FamilySpec& s : builtin_specs()) {
    REQUIRE(check_family(s).holds);
    for (int i = 0; i < 1000; ++i) {
      mpz_class k(static_cast<unsigned long>(rng() % 1000001));
      if (s.id == Family::A1 && k == 0) k = 1;  // n = 0 is out of domain
      Natural n(s.n.eval(k)), x(s.x.eval(k)), y(s.y.eval(k)), z(s.z.eval(k));
      CHECK(verify(n, Triple{x, y, z}));
    }
  }
}

TEST_CASE("the formula table matches the dispatching constructor") {
  for (const FamilySpec& s : builtin_specs()) {
    LinearForm f = family_form(s.id);
    CHECK(s.n == Polynomial{static_cast<long>(f.offset), static_cast<long>(f.stride)});
    for (u64 k : {0ull, 1ull, 2ull, 97ull, 12345ull}) {
      if (s.id == Family::A1 && k == 0) continue;
      mpz_class kk(static_cast<unsigned long>(k));
      ResidueClass c{Natural(s.n.eval(kk)), s.id, Natural(k), false};
      Triple t = construct(c);
      CHECK(t.x == Natural(s.x.eval(kk)));
      CHECK(t.y == Natural(s.y.eval(kk)));
      CHECK(t.z == Natural(s.z.eval(kk)));
    }
  }
}

TEST_CASE("spec polynomials are positive where the families live") {
  for (const FamilySpec& s : builtin_specs()) {
    mpz_class k0(s.id == Family::A1 ? 1 : 0);
    for (const Polynomial* p : {&s.n, &s.x, &s.y, &s.z}) {
      CHECK(p->coeffs().back() > 0);  // positive leading coefficient
      CHECK(p->eval(k0) > 0);
    }
  }
}

TEST_CASE("spec table text fixture round trips") {
  std::ostringstream out;
  write_spec_table(out);
  std::istringstream in(out.str());
  auto parsed = parse_spec_table(in);
  REQUIRE(parsed.size() == 6);
  for (size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].id == builtin_specs()[i].id);
    CHECK(parsed[i].n == builtin_specs()[i].n);
    CHECK(parsed[i].x == builtin_specs()[i].x);
    CHECK(parsed[i].y == builtin_specs()[i].y);
    CHECK(parsed[i].z == builtin_specs()[i].z);
  }
}

TEST_CASE("malformed spec tables are rejected") {
  std::istringstream missing("A1 0,4 0,2 0,4\n");
  CHECK_THROWS_AS(parse_spec_table(missing), std::runtime_error);
  std::istringstream badfam("Q 0,4 0,2 0,4 0,4\n");
  CHECK_THROWS_AS(parse_spec_table(badfam), std::runtime_error);
  std::istringstream badcoeff("A1 0,x 0,2 0,4 0,4\n");
  CHECK_THROWS_AS(parse_spec_table(badcoeff), std::runtime_error);
}

TEST_CASE("a corrupted table row is caught by the checker") {
  std::istringstream in("E 13,24 26,74,48 4,6 53,226,318,144\n");  // z constant off by one
  auto specs = parse_spec_table(in);
  REQUIRE(specs.size() == 1);
  CHECK(!check_family(specs[0]).holds);
}

TEST_CASE("polynomial pretty printing") {
  CHECK(Polynomial{3, 7, 4}.str() == "4k^2+7k+3");
  CHECK(Polynomial{}.str() == "0");
  CHECK(Polynomial{0, 1}.str() == "k");
  CHECK((Polynomial{0, 1} - Polynomial{5, 2}).str() == "-k-5");
}
