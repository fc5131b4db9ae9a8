#include <doctest.h>

#include "kmbraid/factory.hpp"
#include "kmbraid/parse.hpp"
#include "kmbraid/render.hpp"

using namespace kmbraid;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

} // namespace

TEST_CASE("grammar basics") {
  auto aff = make_affine("A2");
  LieElement x = parse_element("1/2*t^2*E12 - c", *aff);
  CHECK(x.coeff(BasisSymbol::loop(2, aff->base().symbol_named("E12")->index)) == Rational(1, 2));
  CHECK(x.coeff(BasisSymbol::central()) == Rational(-1));
  CHECK(x.term_count() == 2);

  // like terms merge
  LieElement y = parse_element("E1 + E1", *aff);
  CHECK(y == Rational(2) * aff->basis_element(BasisSymbol::loop(0, 0)));

  // t^0 is the bare symbol
  CHECK(parse_element("t^0*H1", *aff) == parse_element("H1", *aff));

  // negative powers and signs
  LieElement z = parse_element("-3/4*t^-1*F21 + d", *aff);
  CHECK(z.coeff(BasisSymbol::loop(-1, aff->base().symbol_named("F21")->index)) ==
        Rational(-3, 4));
  CHECK(z.coeff(BasisSymbol::derivation()) == Rational(1));

  CHECK(parse_element("0", *aff).is_zero());
}

TEST_CASE("errors carry positions and names") {
  auto aff = make_affine("A2");
  auto a2 = make_finite("A2");
  CHECK(code_of([&] { parse_element("E1 +", *aff); }) == Errc::SyntaxError);
  CHECK(code_of([&] { parse_element("1/2 E1", *aff); }) == Errc::SyntaxError);
  CHECK(code_of([&] { parse_element("t^*E1", *aff); }) == Errc::SyntaxError);
  CHECK(code_of([&] { parse_element("E9", *aff); }) == Errc::UnknownSymbol);
  CHECK(code_of([&] { parse_element("c", *a2); }) == Errc::UnknownSymbol);
  CHECK(code_of([&] { parse_element("t^1*E1", *a2); }) == Errc::UnknownSymbol);
  try {
    parse_element("E1 + @", *aff);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("parse after print is the identity on canonical forms") {
  auto aff = make_affine("A2");
  std::vector<std::string> exprs = {"t^2*E1",
                                    "1/2*t^2*E12 - c",
                                    "E1 - E2 + 5*t^-3*F1",
                                    "d + c - 7/3*H2",
                                    "0"};
  for (const auto& s : exprs) {
    LieElement x = parse_element(s, *aff);
    CHECK(parse_element(render_element(x), *aff) == x);
  }
  // print after parse is idempotent
  for (const auto& s : exprs) {
    std::string once = render_element(parse_element(s, *aff));
    std::string twice = render_element(parse_element(once, *aff));
    CHECK(once == twice);
  }
}

TEST_CASE("finite algebra expressions") {
  auto a2 = make_finite("A2");
  LieElement x = parse_element("2*E12 - 1/3*H1", *a2);
  CHECK(x.coeff(*a2->symbol_named("E12")) == Rational(2));
  CHECK(x.coeff(*a2->symbol_named("H1")) == Rational(-1, 3));
  CHECK(parse_element("t^0*H1", *a2) == a2->basis_element(*a2->symbol_named("H1")));
}
