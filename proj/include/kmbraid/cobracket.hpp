#ifndef KMBRAID_COBRACKET_HPP
#define KMBRAID_COBRACKET_HPP

#include <memory>
#include <mutex>

#include <json.hpp>

#include "kmbraid/loop.hpp"
#include "kmbraid/tensor_ops.hpp"

namespace kmbraid {

/// Cocycle-extension engine: delta on generators is read from the algebra,
/// every other basis symbol is expanded through its bracket certificate via
/// delta[x,y] = ad_x delta(y) - ad_y delta(x). Values are memoized per
/// symbol; the memo is the only mutable state and is guarded for exclusive
/// writes with concurrent readers recomputing harmlessly.
class CobracketTable {
public:
  explicit CobracketTable(std::shared_ptr<const Algebra> alg) : alg_(std::move(alg)) {}

  const Algebra& algebra() const { return *alg_; }

  TensorElement delta_symbol(BasisSymbol s) const;

  /// Linear extension over the support of x.
  TensorElement delta(const LieElement& x) const;

private:
  std::shared_ptr<const Algebra> alg_;
  mutable std::mutex mu_;
  mutable std::map<BasisSymbol, TensorElement> memo_;
};

/// Coboundary of r at x: del r(x) = ad_x r.
TensorElement coboundary(const TensorElement& r, const LieElement& x);

/// r with its ad-invariant symmetric part r+ = (r + tau r)/2.
struct QuasitriangularStructure {
  TensorElement r;
  TensorElement r_plus() const { return symmetric_part(r); }
};

/// Drinfel'd–Sklyanin solution for a finite-type algebra:
/// r = sum_{alpha>0} e_alpha (x) f_alpha / <e_alpha, f_alpha> + (1/2) Omega_h,
/// with the Cartan part the inverse Gram tensor of the invariant form. The
/// normalizations are pinned by checking del r = delta on every generator;
/// NormalizationFailure if that fails.
QuasitriangularStructure canonical_r(const std::shared_ptr<const ChevalleyAlgebra>& g,
                                     const CobracketTable& delta);

/// Quasitriangular structure of L#(C') inside a finite ambient algebra: the
/// e (x) f sum runs over the positive roots supported on the sub simple
/// indices, the Cartan part stays the full ambient one.
QuasitriangularStructure sharp_r(const std::shared_ptr<const ChevalleyAlgebra>& ambient,
                                 const std::vector<int>& sub_simple, const CobracketTable& delta);

/// Quasitriangular structure of the degree-0 part L#(C) of an affine algebra:
/// the finite canonical r embedded at degree 0, extended by the Cartan
/// pairing on kc + kd, i.e. + (c (x) d + d (x) c)/2.
QuasitriangularStructure affine_sharp_r(const std::shared_ptr<const AffineLoopAlgebra>& alg,
                                        const CobracketTable& delta);

struct CheckFailure {
  std::string check;
  std::string x;
  std::string y;
  std::string expected;
  std::string got;
};

struct Report {
  std::string instance;
  long pairs_checked = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
  void note(std::string check, std::string x, std::string y, std::string expected,
            std::string got) {
    failures.push_back({std::move(check), std::move(x), std::move(y), std::move(expected),
                        std::move(got)});
  }
};

/// Definition of a Lie bialgebra, checked exhaustively over the basis window:
/// anticocommutativity and co-Jacobi per symbol, the 1-cocycle identity per
/// symbol pair. Failures are report entries carrying the first counterexample
/// data, not exceptions.
Report verify_lie_bialgebra(const CobracketTable& delta, int lo, int hi);

/// Quasitriangularity of r: vanishing CYBE defect, ad-invariant symmetric
/// part, (id (x) delta) r = [r_13, r_12], and del r = delta on every basis
/// element of the window.
Report verify_quasitriangular(const CobracketTable& delta, const TensorElement& r, int lo = 0,
                              int hi = 0);

} // namespace kmbraid

#endif
