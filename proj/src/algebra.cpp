#include "kmbraid/algebra.hpp"

namespace kmbraid {

LieElement Algebra::bracket(const LieElement& x, const LieElement& y) const {
  if (x.algebra_ptr() != this || y.algebra_ptr() != this)
    fail(Errc::OperandMismatch, "bracket operands not from this algebra");
  LieElement out(*this);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      LieElement part = bracket_basis(a, b);
      part *= ca * cb;
      out += part;
    }
  return out;
}

Rational Algebra::form(const LieElement& x, const LieElement& y) const {
  if (x.algebra_ptr() != this || y.algebra_ptr() != this)
    fail(Errc::OperandMismatch, "form operands not from this algebra");
  Rational out = 0;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out += ca * cb * form_basis(a, b);
  return out;
}

} // namespace kmbraid
