#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles/schur_oracle.hpp"
#include "realiz/class_text.hpp"
#include "realiz/cohomology.hpp"
#include "realiz/errors.hpp"

using namespace realiz;

namespace {

CohomologyClass cls(const char* text, GrassmannianSpec g) { return parse_class(text, g); }

CohomologyClass random_class(std::mt19937& rng, const GrassmannianSpec& g) {
  const auto basis = box_partitions(g);
  std::uniform_int_distribution<int> coeff(-3, 3), count(1, 4);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  CohomologyClass c(g);
  for (int i = count(rng); i > 0; --i) c.add(basis[pick(rng)], coeff(rng));
  return c;
}

}  // namespace

TEST_CASE("class storage") {
  GrassmannianSpec g(2, 4);
  CohomologyClass c(g);
  c.add({1}, 2);
  c.add({1}, -2);
  CHECK(c.is_zero());
  CHECK_THROWS_AS(c.add({3}, 1), InvalidPartition);
  CHECK(CohomologyClass::dual_schubert(g, {1}) == CohomologyClass::schubert(g, {2, 1}));
  CohomologyClass mixed = cls("s[1] + s[2]", g);
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK_FALSE(mixed.codimension().has_value());
  CHECK(cls("s[2] + s[1,1]", g).dimension() == 2);
}

TEST_CASE("pieri_multiply") {
  GrassmannianSpec g(2, 4);
  CHECK(pieri_multiply(cls("s[1]", g), 1) == cls("s[2] + s[1,1]", g));
  CHECK(pieri_multiply(cls("s[2,1]", g), 1) == cls("s[2,2]", g));
  CHECK(pieri_multiply(cls("s[2,1]", g), 0) == cls("s[2,1]", g));
  CHECK(pieri_multiply(cls("s[1]", g), 3).is_zero());
}

TEST_CASE("lr_coefficient") {
  CHECK(lr_coefficient({1}, {1, 1}, {2, 1}) == 1);
  CHECK(lr_coefficient({1}, {1}, {2, 2}) == 0);
  CHECK(lr_coefficient({2, 1}, {}, {2, 1}) == 1);
  // frozen from the Schur-polynomial oracle
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {4, 2}) == 1);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {4, 3, 2}) == 2);
  CHECK(lr_coefficient({3, 2, 1}, {3, 2, 1}, {4, 4, 2, 1, 1}) == 3);
}

TEST_CASE("lr_coefficient agrees with Schur polynomial oracle") {
  std::vector<Partition> small;
  for (int w = 0; w <= 4; ++w)
    for (const auto& p : enumerate_lambda(w, {4, 8})) small.push_back(p);
  int checked = 0;
  for (const auto& a : small)
    for (const auto& b : small) {
      if (b < a) continue;
      std::vector<Partition> targets = enumerate_lambda(a.weight() + b.weight(), {5, 10});
      auto expansion = oracle::peel(oracle::times(oracle::schur(a, 5), oracle::schur(b, 5)), 5);
      for (const auto& nu : targets) {
        auto it = expansion.find(nu);
        const Integer want(static_cast<long>(it == expansion.end() ? 0 : it->second));
        CHECK(lr_coefficient(a, b, nu) == want);
        CHECK(lr_coefficient(b, a, nu) == want);
        ++checked;
      }
    }
  CHECK(checked > 600);
}

TEST_CASE("multiply") {
  GrassmannianSpec g(2, 4);
  CHECK(multiply(cls("s[2]", g), cls("s[1,1]", g)).is_zero());
  CHECK(multiply(cls("s[1]", g), cls("s[1]", g)) == cls("s[2] + s[1,1]", g));
  CohomologyClass b = cls("3*s[2,1] + s[1]", g);
  CHECK(multiply(CohomologyClass::unit(g), b) == b);
  CHECK_THROWS_AS(multiply(cls("s[1]", g), cls("s[1]", {2, 5})), SpaceMismatch);
}

TEST_CASE("multiply agrees with Schur polynomial oracle on basis pairs") {
  for (GrassmannianSpec g : {GrassmannianSpec(2, 5), GrassmannianSpec(3, 6), GrassmannianSpec(2, 6), GrassmannianSpec(3, 7)}) {
    const auto basis = box_partitions(g);
    for (const auto& a : basis)
      for (const auto& b : basis)
        CHECK(multiply(CohomologyClass::schubert(g, a), CohomologyClass::schubert(g, b)) == oracle::product(g, a, b));
  }
}

TEST_CASE("oracle_multiply") {
  GrassmannianSpec g(2, 4);
  CHECK(oracle_multiply(cls("s[2,1]", g), cls("s[1]", g)) == cls("s[2,2]", g));
  CHECK(oracle_multiply(cls("s[1]", g), cls("s[1]", g)) == cls("s[2] + s[1,1]", g));
  CHECK(oracle_multiply(CohomologyClass::unit(g), cls("s[2,1]", g)) == cls("s[2,1]", g));
  CHECK_THROWS_AS(oracle_multiply(cls("s[1]", g), cls("s[1]", {2, 5})), SpaceMismatch);
}

TEST_CASE("integrate and pair") {
  GrassmannianSpec g(2, 4);
  CHECK(integrate(cls("s[2,2]", g)) == 1);
  CHECK(integrate(hyperplane_power(g, 4)) == 2);
  CHECK(integrate(multiply(cls("s[2]", g), cls("s[1,1]", g))) == 0);
  CHECK(integrate(CohomologyClass(g)) == 0);
  CHECK(pair(cls("s[2]", g), cls("s[2]", g)) == 1);
  CHECK(pair(cls("s[2]", g), cls("s[1,1]", g)) == 0);
  CHECK(pair(cls("s[2,1]", g), CohomologyClass::schubert(g, complement({2, 1}, g))) == 1);
}

TEST_CASE("transpose_class") {
  CohomologyClass c = cls("2*s[2] + 5*s[1,1]", {2, 5});
  CohomologyClass t = transpose_class(c);
  CHECK(t.space() == GrassmannianSpec(3, 5));
  CHECK(t == cls("5*s[2] + 2*s[1,1]", {3, 5}));
  CHECK(transpose_class(t) == c);
  CHECK(transpose_class(cls("s[2,1]", {2, 4})) == cls("s[2,1]", {2, 4}));
  CHECK(transpose_class(cls("s[3]", {2, 5})) == cls("s[1,1,1]", {3, 5}));
}

TEST_CASE("complement_class bridges the two conventions") {
  GrassmannianSpec g(3, 6);
  CohomologyClass dim3 = cls("s[3,3] + 2*s[3,2,1] + 3*s[2,2,2]", g);
  CohomologyClass c = complement_class(dim3);
  CHECK(c == cls("s[3] + 2*s[2,1] + 3*s[1,1,1]", g));
  CHECK(complement_class(c) == dim3);
}

TEST_CASE("property: ring axioms on random classes") {
  std::mt19937 rng(11);
  for (GrassmannianSpec g : {GrassmannianSpec(2, 5), GrassmannianSpec(3, 6)}) {
    for (int trial = 0; trial < 40; ++trial) {
      CohomologyClass a = random_class(rng, g), b = random_class(rng, g), c = random_class(rng, g);
      CHECK(multiply(a, b) == multiply(b, a));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(a, CohomologyClass::unit(g)) == a);
      CHECK(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
      CHECK(transpose_class(multiply(a, b)) == multiply(transpose_class(a), transpose_class(b)));
    }
  }
}

TEST_CASE("property: Pieri agrees with multiplication by a row class") {
  std::mt19937 rng(5);
  for (GrassmannianSpec g : {GrassmannianSpec(2, 5), GrassmannianSpec(3, 6), GrassmannianSpec(3, 7)})
    for (int trial = 0; trial < 30; ++trial) {
      CohomologyClass a = random_class(rng, g);
      for (int p = 0; p <= g.corank(); ++p)
        CHECK(pieri_multiply(a, p) == multiply(a, CohomologyClass::schubert(g, Partition{p})));
    }
}

TEST_CASE("property: grading and Poincare duality") {
  for (GrassmannianSpec g : {GrassmannianSpec(2, 5), GrassmannianSpec(3, 6), GrassmannianSpec(2, 7)}) {
    const auto basis = box_partitions(g);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        CohomologyClass p = multiply(CohomologyClass::schubert(g, a), CohomologyClass::schubert(g, b));
        for (const auto& [nu, coeff] : p.terms()) CHECK(nu.weight() == a.weight() + b.weight());
        if (a.weight() + b.weight() > g.dim()) CHECK(p.is_zero());
      }
    for (int r = 0; r <= g.dim(); ++r)
      for (const auto& a : enumerate_lambda(r, g))
        for (const auto& b : enumerate_lambda(r, g)) {
          const Integer entry = pair(CohomologyClass::schubert(g, a), CohomologyClass::schubert(g, complement(b, g)));
          CHECK(entry == (a == b ? 1 : 0));
        }
  }
}
