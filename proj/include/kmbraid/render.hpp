#ifndef KMBRAID_RENDER_HPP
#define KMBRAID_RENDER_HPP

#include <string>

#include <json.hpp>

#include "kmbraid/algebra.hpp"
#include "kmbraid/chevalley.hpp"
#include "kmbraid/gcm.hpp"

namespace kmbraid {

struct RenderOptions {
  bool unicode = false;
};

/// Canonical text forms. Terms are emitted in the fixed symbol order with
/// coefficients as "p/q"; identical invocations produce identical strings.
std::string render_element(const LieElement& x, const RenderOptions& opt = {});

/// Expanded tensor form, factors joined by "(x)".
std::string render_tensor(const TensorElement& t, const RenderOptions& opt = {});

/// Wedge form of an anticocommutative tensor: pairs a(x)b - b(x)a with a < b
/// are printed once as (a ^ b). Falls back to the expanded form when the
/// input is not antisymmetric.
std::string render_tensor_wedge(const TensorElement& t, const RenderOptions& opt = {});

std::string render_cube(const TensorCube& t, const RenderOptions& opt = {});

/// LaTeX forms of elements/tensors in the paper's wedge layout.
std::string latex_tensor_wedge(const TensorElement& t);
std::string latex_element(const LieElement& x);

nlohmann::json gcm_to_json(const GeneralizedCartanMatrix& C, const Symmetrizer& d);

/// Structure-constant dump:
/// {"basis":[sym], "bracket":[[i,j,[[k,num,den]]]], "form":[[i,j,num,den]]}.
nlohmann::json structure_to_json(const ChevalleyAlgebra& alg);

/// LaTeX table of the nonzero brackets.
std::string latex_structure_table(const ChevalleyAlgebra& alg);

/// One golden row {element, delta: [[coeff, symA, symB]]} in the CLI grammar.
nlohmann::json delta_row_json(const Algebra& alg, const LieElement& element,
                              const TensorElement& delta);

} // namespace kmbraid

#endif
