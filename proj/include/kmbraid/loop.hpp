#ifndef KMBRAID_LOOP_HPP
#define KMBRAID_LOOP_HPP

#include <map>
#include <memory>
#include <mutex>

#include "kmbraid/chevalley.hpp"

namespace kmbraid {

/// Res(sum zeta_i t^i) = zeta_{-1}.
Rational residue(const std::map<int, Rational>& laurent);

/// Coefficients of t * d/dt of a Laurent polynomial.
std::map<int, Rational> t_ddt(const std::map<int, Rational>& laurent);

/// Degree window for exhaustive verification sweeps over the affine basis.
struct DegreeWindow {
  int lo = 0;
  int hi = 0;
};

/// Untwisted affine Kac-Moody algebra in the loop realization
/// (k[t,1/t] (x) L(C)) + kc + kd. Basis symbols are loop(degree, finite
/// index) plus the central symbol c and the derivation symbol d. The full
/// bracket is
///   [p(x)g + lc + md, q(x)h + sc + td] = pq (x) [g,h]
///       + Res((dp/dt) q) <g,h> c + m t dq/dt (x) h - t t dp/dt (x) g.
/// Elements have finite support, so bracket arithmetic is exact; windows
/// are only needed to enumerate bases for verification sweeps.
class AffineLoopAlgebra final : public Algebra {
public:
  static std::shared_ptr<const AffineLoopAlgebra> build(
      std::shared_ptr<const ChevalleyAlgebra> base, std::string name = "");

  const ChevalleyAlgebra& base() const { return *base_; }
  std::shared_ptr<const ChevalleyAlgebra> base_ptr() const { return base_; }
  const GeneralizedCartanMatrix& affine_matrix() const { return affine_C_; }
  const Symmetrizer& affine_symmetrizer() const { return affine_d_; }
  const RootDatum& affine_datum() const { return affine_datum_; }

  BasisSymbol loop_symbol(int degree, BasisSymbol finite_sym) const {
    return BasisSymbol::loop(degree, finite_sym.index);
  }

  /// The l+1 Chevalley triples of L(C~) inside the loop realization:
  /// e_0 = t (x) E_0, f_0 = 1/t (x) F_0, h_0 = 1 (x) (-H_theta) + c,
  /// e_i = 1 (x) E_i and so on for 1 <= i <= l.
  struct SerreTriple {
    LieElement e, f, h;
  };
  SerreTriple serre_triple(int i) const;

  /// Loop degree of a homogeneous element (deg c = deg d = 0); nullopt when
  /// the element mixes degrees. The zero element reports degree 0.
  std::optional<int> degree_of(const LieElement& x) const;
  int symbol_degree(BasisSymbol s) const { return s.is_loop() ? s.degree : 0; }

  // Algebra interface
  std::string name() const override { return name_; }
  LieElement bracket_basis(BasisSymbol a, BasisSymbol b) const override;
  Rational form_basis(BasisSymbol a, BasisSymbol b) const override;
  bool has_symbol(BasisSymbol s) const override;
  std::string symbol_name(BasisSymbol s) const override;
  std::optional<BasisSymbol> symbol_named(std::string_view name) const override;
  std::vector<BasisSymbol> basis_window(int lo, int hi) const override;
  bool is_delta_generator(BasisSymbol s) const override;
  TensorElement generator_delta(BasisSymbol s) const override;
  Certificate certificate(BasisSymbol s) const override;

private:
  AffineLoopAlgebra() = default;
  void ensure_certificates(int level) const;

  std::shared_ptr<const ChevalleyAlgebra> base_;
  GeneralizedCartanMatrix affine_C_;
  Symmetrizer affine_d_;
  std::vector<Rational> affine_k_; // half square lengths, used by the cobracket
  RootDatum affine_datum_;
  std::string name_;
  int e0_finite_ = 0; // finite index of E_0 (lowest root vector)
  int f0_finite_ = 0; // finite index of F_0 (highest root vector)

  // deterministic greedy certificates, built per |degree| level on demand
  mutable std::mutex mu_;
  mutable std::map<BasisSymbol, Certificate> certs_;
  mutable int built_level_ = 0;
};

} // namespace kmbraid

#endif
