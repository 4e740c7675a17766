#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realiz/class_text.hpp"
#include "realiz/errors.hpp"
#include "realiz/obstructions.hpp"
#include "realiz/stability.hpp"

using namespace realiz;

namespace {

CohomologyClass cls(const std::string& text, GrassmannianSpec g) { return parse_class(text, g); }
ProductClass pc(const char* text, const ProductSpec& s) { return parse_product_class(text, s); }
std::string num(int v) { return std::to_string(v); }

CohomologyClass dual_family(int a, int b, int c) {
  GrassmannianSpec g(3, 6);
  return CohomologyClass::dual_schubert(g, {3}, a) + CohomologyClass::dual_schubert(g, {2, 1}, b) +
         CohomologyClass::dual_schubert(g, {1, 1, 1}, c);
}

CohomologyClass codim_family(int a, int b, int c) {
  return cls(num(a) + "*s[3] + " + num(b) + "*s[2,1] + " + num(c) + "*s[1,1,1]", {3, 6});
}

SymMatrix expected(int a, int b, int c) {
  return SymMatrix({{Rational(a), Rational(a + b)}, {Rational(a + b), Rational(a + 2 * b + c)}});
}

}  // namespace

TEST_CASE("SpanMapSpec") {
  SpanMapSpec s = SpanMapSpec::from_composition({3, 6}, {2, 1});
  CHECK(s.factors() == ProductSpec{GrassmannianSpec(2, 5), projective(3)});
  CHECK(s.str() == "G(2,5) x G(1,4) -> G(3,6)");
  CHECK_THROWS_AS(SpanMapSpec({3, 6}, ProductSpec{GrassmannianSpec(2, 5)}), SpecMismatch);
  CHECK_THROWS_AS(SpanMapSpec({3, 6}, ProductSpec{GrassmannianSpec(2, 4), projective(3)}), SpecMismatch);
}

TEST_CASE("pullback table: G(2,5) x P^3 to G(3,6)") {
  GrassmannianSpec g(3, 6);
  SpanMapSpec f(g, ProductSpec{GrassmannianSpec(2, 5), projective(3)});
  const ProductSpec& s = f.factors();
  // σ^{i,j} x^k is the tuple (complement of (i,j) in G(2,5), (k)).
  CHECK(pullback_class(CohomologyClass::dual_schubert(g, {3}), f) ==
        pc("(s[3,3]|s[]) + (s[3,2]|s[1]) + (s[3,1]|s[2]) + (s[3]|s[3])", s));
  CHECK(pullback_class(CohomologyClass::dual_schubert(g, {2, 1}), f) ==
        pc("(s[3,2]|s[1]) + (s[3,1]|s[2]) + (s[2,2]|s[2]) + (s[2,1]|s[3])", s));
  CHECK(pullback_class(CohomologyClass::dual_schubert(g, {1, 1, 1}), f) == pc("(s[2,2]|s[2])", s));
  CHECK(pullback_coefficient(CohomologyClass::dual_schubert(g, {1, 1, 1}), f, {{2, 2}, {2}}) == 1);
  CHECK(pullback_coefficient(CohomologyClass::dual_schubert(g, {1, 1, 1}), f, {{3, 1}, {2}}) == 0);
  CHECK(pullback_class(CohomologyClass::unit(g), f) == ProductClass::unit(s));
  CHECK(pullback_class(CohomologyClass::schubert(g, g.full_box()), f) == ProductClass::basis(s, s.top_key()));
  CHECK_THROWS_AS(pullback_coefficient(CohomologyClass::dual_schubert(g, {3}), f, {{3, 3}, {1}}), DegreeMismatch);
  CHECK_THROWS_AS(pullback_coefficient(CohomologyClass::dual_schubert(g, {3}), f, {{3, 3}}), SpecMismatch);
}

TEST_CASE("pullback table: G(2,5) x G(3,6) to G(5,8) after sigma_{2,2}") {
  GrassmannianSpec g(5, 8);
  SpanMapSpec f(g, ProductSpec{GrassmannianSpec(2, 5), GrassmannianSpec(3, 6)});
  const ProductSpec& s = f.factors();
  ProductClass a = ProductClass::basis(s, {{2, 2}, {}});
  CHECK(kunneth_multiply(a, pullback_class(cls("s[3,3,3]", g), f)) ==
        pc("(s[2,2]|s[3,3,3]) + (s[3,2]|s[3,3,2]) + (s[3,3]|s[3,2,2])", s));
  // The printed second line repeats σ_{3,3}⊗σ_{3,3,2}, which has the wrong
  // degree; σ_{3,3}⊗σ_{3,2,2} is the degree-13 term.
  CHECK(kunneth_multiply(a, pullback_class(cls("s[3,3,2,1]", g), f)) ==
        pc("(s[3,2]|s[3,3,2]) + (s[3,3]|s[3,3,1]) + (s[3,3]|s[3,2,2])", s));
  CHECK(kunneth_multiply(a, pullback_class(cls("s[3,3,1,1,1]", g), f)) == pc("(s[3,3]|s[3,3,1])", s));
}

TEST_CASE("pullback table: P^4 x G(2,6) to G(3,7)") {
  GrassmannianSpec g(3, 7);
  SpanMapSpec f(g, ProductSpec{projective(4), GrassmannianSpec(2, 6)});
  const ProductSpec& s = f.factors();
  CHECK(pullback_class(cls("s[4,4]", g), f) ==
        pc("(s[]|s[4,4]) + (s[1]|s[4,3]) + (s[2]|s[4,2]) + (s[3]|s[4,1]) + (s[4]|s[4])", s));
  CHECK(pullback_class(cls("s[4,3,1]", g), f) ==
        pc("(s[1]|s[4,3]) + (s[2]|s[4,2]) + (s[2]|s[3,3]) + (s[3]|s[4,1]) + (s[3]|s[3,2]) + (s[4]|s[3,1])", s));
  CHECK(pullback_class(cls("s[4,2,2]", g), f) == pc("(s[2]|s[4,2]) + (s[3]|s[3,2]) + (s[4]|s[2,2])", s));
  ProductClass surface = kunneth_multiply(hyperplane_monomial(s, {2, 0}), pullback_class(cls("2*s[4,4] + 3*s[4,3,1] + 5*s[4,2,2]", g), f));
  CHECK(surface == pc("2*(s[2]|s[4,4]) + 5*(s[3]|s[4,3]) + 10*(s[4]|s[4,2]) + 3*(s[4]|s[3,3])", s));
}

TEST_CASE("Hodge matrices of the three configurations") {
  SpanMapSpec dim3({3, 6}, ProductSpec{projective(3), GrassmannianSpec(2, 5)});
  SpanMapSpec codim3({5, 8}, ProductSpec{GrassmannianSpec(2, 5), GrassmannianSpec(3, 6)});
  SpanMapSpec g37({3, 7}, ProductSpec{projective(4), GrassmannianSpec(2, 6)});
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        if (a + b + c == 0) continue;
        CohomologyClass nu1 = dual_family(a, b, c);
        CohomologyClass nu2 = cls(num(a) + "*s[3,3,3] + " + num(b) + "*s[3,3,2,1] + " + num(c) + "*s[3,3,1,1,1]", {5, 8});
        CohomologyClass nu3 = cls(num(a) + "*s[4,4] + " + num(b) + "*s[4,3,1] + " + num(c) + "*s[4,2,2]", {3, 7});
        for (const SymMatrix& l : {hodge_matrix(nu1, dim3, {{1}, {}}), hodge_matrix(nu2, codim3, {{2, 2}, {}}),
                                   hodge_matrix(nu3, g37, {{2}, {}})}) {
          CHECK(l == expected(a, b, c));
          CHECK(l.determinant() == a * c - b * b);
        }
      }
  CHECK(hodge_matrix(dual_family(1, 0, 0), dim3, {{1}, {}}) == expected(1, 0, 0));
  CHECK_THROWS_AS(hodge_matrix(dual_family(1, 0, 0), dim3, {{}, {}}), DegreeMismatch);
  CHECK_THROWS_AS(hodge_matrix(dual_family(1, 0, 0), dim3, {{1}}), SpecMismatch);
}

TEST_CASE("search_obstruction") {
  auto w = search_obstruction(codim_family(2, 1, 2));
  REQUIRE(w.has_value());
  CHECK(w->matrix == expected(2, 1, 2));
  CHECK_FALSE(weakly_lorentzian(w->matrix));
  CHECK(w->signs.str() == "++");
  CHECK(w->reason == "not weakly Lorentzian");
  CHECK(hodge_matrix(subvariety_reindex(codim_family(2, 1, 2), w->s, w->t), w->span, w->alpha) == w->matrix);

  CHECK_FALSE(search_obstruction(codim_family(1, 1, 1)).has_value());
  CHECK_FALSE(search_obstruction(cls("s[2,1]", {3, 6})).has_value());
  CHECK_FALSE(search_obstruction(cls("5*s[2,1]", {3, 6})).has_value());
  CHECK_FALSE(search_obstruction(cls("s[1] + s[2]", {3, 6})).has_value());
  CHECK_FALSE(search_obstruction(cls("0", {3, 6})).has_value());
  CHECK_FALSE(search_obstruction(cls("-2*s[3] + s[2,1] + 2*s[1,1,1]", {3, 6})).has_value());
}

TEST_CASE("property: search agrees with b^2 >= ac on the G(3,6) families") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 5; ++c) {
        if (a + b + c == 0) continue;
        const bool obstructed = b * b < a * c;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(search_obstruction(dual_family(a, b, c)).has_value() == obstructed);
        CHECK(search_obstruction(codim_family(a, b, c)).has_value() == obstructed);
      }
}

TEST_CASE("property: search is deterministic") {
  auto first = search_obstruction(dual_family(3, 1, 4));
  auto second = search_obstruction(dual_family(3, 1, 4));
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->span == second->span);
  CHECK(first->alpha == second->alpha);
  CHECK(first->matrix == second->matrix);
}
