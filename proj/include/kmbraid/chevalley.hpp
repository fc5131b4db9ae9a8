#ifndef KMBRAID_CHEVALLEY_HPP
#define KMBRAID_CHEVALLEY_HPP

#include <memory>

#include "kmbraid/algebra.hpp"
#include "kmbraid/realization.hpp"
#include "kmbraid/roots.hpp"

namespace kmbraid {

/// Finite-type simple Lie algebra in a Chevalley basis
/// {e_gamma (gamma > 0), h_i, f_gamma (gamma > 0)}, with structure constants
/// fixed by the extraspecial-pair sign convention over the canonical positive
/// root order (height, then descending lex). Basis symbol indices run
/// e-block, h-block, f-block; for A2 this is the paper basis
/// {E1, E2, E12, H1, H2, F1, F2, F21} with E12 = [E1,E2] and F21 = [F2,F1].
///
/// Carries the invariant form normalized by <h_theta, h_theta> = 2, the
/// omega involution, and the highest/lowest root vectors F0 = e_theta,
/// E0 = f_theta with <F0, E0> = 1 and omega(F0) = -E0.
///
/// Immutable after build; operations are pure and thread-safe.
class ChevalleyAlgebra final : public Algebra {
public:
  static std::shared_ptr<const ChevalleyAlgebra> build(const GeneralizedCartanMatrix& C,
                                                       std::string name = "");

  int dimension() const { return dim_; }
  int rank() const { return datum_.C.n; }
  const RootSystem& roots() const { return roots_; }
  const RootDatum& datum() const { return datum_; }
  const Symmetrizer& symmetrizer() const { return symmetrizer_; }

  BasisSymbol e_symbol(int root_idx) const { return BasisSymbol::finite(root_idx); }
  BasisSymbol h_symbol(int i) const { return BasisSymbol::finite(num_pos_ + i); }
  BasisSymbol f_symbol(int root_idx) const {
    return BasisSymbol::finite(num_pos_ + rank() + root_idx);
  }
  bool is_e(BasisSymbol s) const { return s.index < num_pos_; }
  bool is_h(BasisSymbol s) const { return s.index >= num_pos_ && s.index < num_pos_ + rank(); }
  bool is_f(BasisSymbol s) const { return s.index >= num_pos_ + rank(); }
  /// Root of an e_/f_ symbol as the positive-root index.
  int root_index(BasisSymbol s) const { return is_e(s) ? s.index : s.index - num_pos_ - rank(); }

  /// Weight pairing gamma(h_i) for the weight of a basis symbol (0 on the Cartan).
  int weight_at_coroot(BasisSymbol s, int i) const;

  /// The unique involution with omega(e_i) = -f_i, omega(f_i) = -e_i,
  /// omega(h) = -h on the Cartan.
  LieElement omega(const LieElement& x) const;

  /// theta vectors: F0 in the highest root space, E0 in the lowest, with
  /// <F0,E0> = 1, omega(F0) = -E0, and H_theta = [F0,E0].
  const LieElement& F0() const { return f0_; }
  const LieElement& E0() const { return e0_; }
  const LieElement& Htheta() const { return h_theta_; }
  const HighestRootData& highest() const { return highest_; }

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
  ChevalleyAlgebra() = default;
  void build_structure();

  std::string name_;
  RootDatum datum_;
  RootSystem roots_;
  Symmetrizer symmetrizer_;
  HighestRootData highest_;
  int num_pos_ = 0;
  int dim_ = 0;

  // extraspecial decomposition gamma = eps + zeta for non-simple gamma
  std::vector<int> extra_eps_, extra_zeta_;
  // structure constants N[(i,j)] for positive root pairs with root sum
  std::map<std::pair<int, int>, Rational> pos_n_;
  std::vector<std::vector<LieElement>> table_; // bracket of basis pairs
  std::vector<std::vector<Rational>> gram_;    // normalized invariant form
  std::vector<LieElement> omega_;              // omega on basis symbols
  LieElement e0_, f0_, h_theta_;
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> name_index_;
};

} // namespace kmbraid

#endif
