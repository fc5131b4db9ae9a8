#include "kmbraid/tensor_ops.hpp"

namespace kmbraid {

namespace {

const Algebra& common_algebra(const void* a, const void* b, const Algebra* pa, const Algebra* pb) {
  (void)a;
  (void)b;
  if (pa && pb && pa != pb) fail(Errc::OperandMismatch, "operands from different algebras");
  const Algebra* p = pa ? pa : pb;
  if (!p) fail(Errc::Internal, "operands with no algebra");
  return *p;
}

} // namespace

TensorElement tensor(const LieElement& a, const LieElement& b) {
  const Algebra& alg = common_algebra(&a, &b, a.algebra_ptr(), b.algebra_ptr());
  TensorElement out(alg);
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out.add_term({x, y}, cx * cy);
  return out;
}

TensorElement wedge(const LieElement& a, const LieElement& b) {
  const Algebra& alg = common_algebra(&a, &b, a.algebra_ptr(), b.algebra_ptr());
  TensorElement out(alg);
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      Rational c = cx * cy;
      out.add_term({x, y}, c);
      out.add_term({y, x}, -c);
    }
  return out;
}

TensorElement flip(const TensorElement& t) {
  TensorElement out;
  if (t.algebra_ptr()) out = TensorElement(*t.algebra_ptr());
  for (const auto& [k, c] : t.terms()) out.add_term({k.second, k.first}, c);
  return out;
}

TensorElement symmetric_part(const TensorElement& r) {
  TensorElement out = r + flip(r);
  out *= half();
  return out;
}

TensorElement antisymmetric_part(const TensorElement& r) {
  TensorElement out = r - flip(r);
  out *= half();
  return out;
}

TensorElement ad_tensor(const LieElement& x, const TensorElement& t) {
  const Algebra& alg = common_algebra(&x, &t, x.algebra_ptr(), t.algebra_ptr());
  TensorElement out(alg);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [k, ck] : t.terms()) {
      const auto& [y, z] = k;
      Rational c = ca * ck;
      LieElement left = alg.bracket_basis(a, y);
      for (const auto& [w, cw] : left.terms()) out.add_term({w, z}, c * cw);
      LieElement right = alg.bracket_basis(a, z);
      for (const auto& [w, cw] : right.terms()) out.add_term({y, w}, c * cw);
    }
  return out;
}

TensorCube ad_cube(const LieElement& x, const TensorCube& t) {
  const Algebra& alg = common_algebra(&x, &t, x.algebra_ptr(), t.algebra_ptr());
  TensorCube out(alg);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [k, ck] : t.terms()) {
      Rational c = ca * ck;
      for (int slot = 0; slot < 3; ++slot) {
        LieElement moved = alg.bracket_basis(a, k[slot]);
        for (const auto& [w, cw] : moved.terms()) {
          SymbolTriple key = k;
          key[slot] = w;
          out.add_term(key, c * cw);
        }
      }
    }
  return out;
}

// [[r,s]] = [r_12,s_13] + [r_12,s_23] + [r_13,s_23], bracket in the common slot.
TensorCube schouten_bracket(const TensorElement& r, const TensorElement& s) {
  const Algebra& alg = common_algebra(&r, &s, r.algebra_ptr(), s.algebra_ptr());
  TensorCube out(alg);
  for (const auto& [rk, rc] : r.terms()) {
    const auto& [a, b] = rk;
    for (const auto& [sk, sc] : s.terms()) {
      const auto& [c, d] = sk;
      Rational coeff = rc * sc;
      // [r_12, s_13] = [a,c] (x) b (x) d
      LieElement ac = alg.bracket_basis(a, c);
      for (const auto& [w, cw] : ac.terms()) out.add_term({w, b, d}, coeff * cw);
      // [r_12, s_23] = a (x) [b,c] (x) d
      LieElement bc = alg.bracket_basis(b, c);
      for (const auto& [w, cw] : bc.terms()) out.add_term({a, w, d}, coeff * cw);
      // [r_13, s_23] = a (x) c (x) [b,d]
      LieElement bd = alg.bracket_basis(b, d);
      for (const auto& [w, cw] : bd.terms()) out.add_term({a, c, w}, coeff * cw);
    }
  }
  return out;
}

TensorCube cybe_defect(const TensorElement& r) { return schouten_bracket(r, r); }

TensorCube apply_to_slot(const TensorElement& t, int slot,
                         const std::function<TensorElement(BasisSymbol)>& f) {
  TensorCube out;
  if (t.algebra_ptr()) out = TensorCube(*t.algebra_ptr());
  for (const auto& [k, c] : t.terms()) {
    const auto& [a, b] = k;
    TensorElement expanded = f(slot == 0 ? a : b);
    for (const auto& [fk, fc] : expanded.terms()) {
      if (slot == 0)
        out.add_term({fk.first, fk.second, b}, c * fc);
      else
        out.add_term({a, fk.first, fk.second}, c * fc);
    }
  }
  return out;
}

TensorCube rotate(const TensorCube& t) {
  TensorCube out;
  if (t.algebra_ptr()) out = TensorCube(*t.algebra_ptr());
  for (const auto& [k, c] : t.terms()) out.add_term({k[2], k[0], k[1]}, c);
  return out;
}

} // namespace kmbraid
