#include <doctest.h>

#include <random>

#include "kmbraid/cobracket.hpp"
#include "kmbraid/factory.hpp"
#include "kmbraid/render.hpp"
#include "oracles.hpp"

using namespace kmbraid;

namespace {

LieElement el(const Algebra& a, const std::string& name) {
  return a.basis_element(*a.symbol_named(name));
}

} // namespace

TEST_CASE("wedge is antisymmetric and expands eagerly") {
  auto a2 = make_finite("A2");
  LieElement e1 = el(*a2, "E1"), h1 = el(*a2, "H1");
  CHECK(wedge(e1, e1).is_zero());
  TensorElement w = wedge(e1, h1);
  CHECK(w.coeff({*a2->symbol_named("E1"), *a2->symbol_named("H1")}) == Rational(1));
  CHECK(w.coeff({*a2->symbol_named("H1"), *a2->symbol_named("E1")}) == Rational(-1));
  CHECK(w == -wedge(h1, e1));
  // random antisymmetry sweep over basis pairs
  for (int i = 0; i < a2->dimension(); ++i)
    for (int j = 0; j < a2->dimension(); ++j) {
      LieElement x = a2->basis_element(BasisSymbol::finite(i));
      LieElement y = a2->basis_element(BasisSymbol::finite(j));
      CHECK(wedge(x, y) == -wedge(y, x));
    }
}

TEST_CASE("wedge of sl2 generators reproduces the generator cobracket") {
  auto a1 = make_finite("A1");
  CobracketTable delta(a1);
  TensorElement half_wedge = half() * wedge(el(*a1, "E1"), el(*a1, "H1"));
  CHECK(half_wedge == delta.delta(el(*a1, "E1")));
}

TEST_CASE("mixed-algebra operands are rejected") {
  auto a1 = make_finite("A1");
  auto a2 = make_finite("A2");
  CHECK_THROWS_AS(wedge(el(*a1, "E1"), el(*a2, "E1")), Error);
}

TEST_CASE("ad_tensor in sl2: hand-expanded cases") {
  auto a1 = make_finite("A1");
  LieElement e = el(*a1, "E1"), f = el(*a1, "F1"), h = el(*a1, "H1");
  // ad_h (e (x) f) = 2e(x)f - 2e(x)f = 0
  CHECK(ad_tensor(h, tensor(e, f)).is_zero());
  CHECK(ad_tensor(e, TensorElement(*a1)).is_zero());
  // ad_e (e(x)f + (1/4) h(x)h) = (1/2)(e(x)h - h(x)e)
  TensorElement r = tensor(e, f) + Rational(1, 4) * tensor(h, h);
  TensorElement expect = half() * wedge(e, h);
  CHECK(ad_tensor(e, r) == expect);
}

TEST_CASE("ad_tensor is a derivation in the tensor factors") {
  auto a2 = make_finite("A2");
  for (int x = 0; x < a2->dimension(); ++x)
    for (int i = 0; i < a2->dimension(); ++i)
      for (int j = 0; j < a2->dimension(); ++j) {
        LieElement ex = a2->basis_element(BasisSymbol::finite(x));
        LieElement a = a2->basis_element(BasisSymbol::finite(i));
        LieElement b = a2->basis_element(BasisSymbol::finite(j));
        TensorElement lhs = ad_tensor(ex, tensor(a, b));
        TensorElement rhs = tensor(a2->bracket(ex, a), b) + tensor(a, a2->bracket(ex, b));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("schouten bracket matches the hand expansion in sl2") {
  auto a1 = make_finite("A1");
  LieElement e = el(*a1, "E1"), f = el(*a1, "F1"), h = el(*a1, "H1");
  CHECK(schouten_bracket(TensorElement(*a1), tensor(e, f)).is_zero());
  // [[e(x)f, e(x)f]] = -e (x) h (x) f   (only the middle-slot bracket survives)
  TensorCube defect = cybe_defect(tensor(e, f));
  TensorCube expect(*a1);
  expect.add_term({*a1->symbol_named("E1"), *a1->symbol_named("H1"), *a1->symbol_named("F1")},
                  Rational(-1));
  CHECK(defect == expect);
  // the Cartan part is required: the canonical r has zero defect
  TensorElement r = tensor(e, f) + Rational(1, 4) * tensor(h, h);
  CHECK(cybe_defect(r).is_zero());
}

TEST_CASE("cybe_defect is quadratic under scaling") {
  auto a1 = make_finite("A1");
  LieElement e = el(*a1, "E1"), f = el(*a1, "F1");
  TensorElement r = tensor(e, f);
  for (Rational lam : {Rational(2), Rational(-3), Rational(5, 7)}) {
    CHECK(cybe_defect(lam * r) == lam * lam * cybe_defect(r));
  }
}

TEST_CASE("symmetric part splits r") {
  auto a1 = make_finite("A1");
  LieElement e = el(*a1, "E1"), f = el(*a1, "F1"), h = el(*a1, "H1");
  CHECK(symmetric_part(wedge(e, f)).is_zero());
  TensorElement r = tensor(e, f) + Rational(1, 4) * tensor(h, h);
  TensorElement expect = half() * (tensor(e, f) + tensor(f, e)) + Rational(1, 4) * tensor(h, h);
  CHECK(symmetric_part(r) == expect);
  CHECK(symmetric_part(r) + antisymmetric_part(r) == r);
  CHECK(flip(symmetric_part(r)) == symmetric_part(r));
}

TEST_CASE("the canonical symmetric part is ad-invariant on sl2 and sl3") {
  for (const char* spec : {"A1", "A2"}) {
    auto g = make_finite(spec);
    CobracketTable delta(g);
    TensorElement rp = canonical_r(g, delta).r_plus();
    for (BasisSymbol s : g->basis_window(0, 0))
      CHECK(ad_tensor(g->basis_element(s), rp).is_zero());
  }
}

TEST_CASE("engine brackets match the defining matrix realizations") {
  auto check = [&](const char* spec, const oracle::MatrixAlgebra& m) {
    auto g = make_finite(spec);
    for (const auto& a : m.names)
      for (const auto& b : m.names) {
        auto coeffs = m.bracket(a, b);
        LieElement want(*g);
        for (size_t k = 0; k < m.names.size(); ++k)
          want.add_term(*g->symbol_named(m.names[k]), coeffs[k]);
        CHECK(g->bracket(el(*g, a), el(*g, b)) == want);
      }
  };
  check("A1", oracle::MatrixAlgebra::sl2());
  check("A2", oracle::MatrixAlgebra::sl3());
}
