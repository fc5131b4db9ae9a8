#ifndef KMBRAID_TENSOR_OPS_HPP
#define KMBRAID_TENSOR_OPS_HPP

#include <functional>

#include "kmbraid/algebra.hpp"

namespace kmbraid {

/// a (x) b, bilinear.
TensorElement tensor(const LieElement& a, const LieElement& b);

/// a (x) b - b (x) a, expanded eagerly into canonical sparse form.
TensorElement wedge(const LieElement& a, const LieElement& b);

/// Tensor flip tau(x (x) y) = y (x) x.
TensorElement flip(const TensorElement& t);

/// Symmetric part (r + tau(r)) / 2.
TensorElement symmetric_part(const TensorElement& r);

/// Antisymmetric remainder r - symmetric_part(r).
TensorElement antisymmetric_part(const TensorElement& r);

/// Adjoint action extended to tensor products:
/// ad_x(y (x) z) = [x,y] (x) z + y (x) [x,z]. Bilinear in both arguments.
TensorElement ad_tensor(const LieElement& x, const TensorElement& t);

/// Same derivation rule on triple tensors.
TensorCube ad_cube(const LieElement& x, const TensorCube& t);

/// Places a two-tensor into slots (i,j) of a triple tensor, identity slot
/// elsewhere is left open; used to form r_12, r_13, r_23 style products.
/// [insert(r, i, j), insert(s, k, l)] with the bracket taken in the shared
/// slot is provided through schouten_bracket below.
TensorCube schouten_bracket(const TensorElement& r, const TensorElement& s);

/// cybe_defect(r) = [[r,r]] (zero exactly when r satisfies the CYBE).
TensorCube cybe_defect(const TensorElement& r);

/// (delta (x) id) style plumbing used by co-Jacobi checks: applies f to the
/// chosen slot of each tensor term. Slot is 0 or 1.
TensorCube apply_to_slot(const TensorElement& t, int slot,
                         const std::function<TensorElement(BasisSymbol)>& f);

/// Cyclic rotation of triple tensors: x (x) y (x) z -> z (x) x (x) y.
TensorCube rotate(const TensorCube& t);

} // namespace kmbraid

#endif
