#ifndef KMBRAID_REALIZATION_HPP
#define KMBRAID_REALIZATION_HPP

#include <vector>

#include "kmbraid/gcm.hpp"

namespace kmbraid {

/// Minimal realization data: H of dimension 2n - rank(C), simple coroots h_i
/// as coordinate vectors in H, simple roots alpha_j as covectors on H, with
/// alpha_j(h_i) = C_ij and both families linearly independent.
///
/// Coordinate conventions: coroots are standard basis vectors where possible,
/// derivation directions appended last. For untwisted affine data built via
/// affine_realization the coordinates are (h_1..h_l span, c, d), h_0 maps to
/// -h_theta + c and alpha_0 picks up the d direction.
struct RootDatum {
  GeneralizedCartanMatrix C;
  int dimH = 0;
  std::vector<std::vector<Rational>> coroots; // n vectors of length dimH
  std::vector<std::vector<Rational>> roots;   // n covectors of length dimH
  bool affine_layout = false;

  Rational root_at_coroot(int j, int i) const; // alpha_j(h_i)
  Rational eval_root(int j, const std::vector<Rational>& h) const;
};

RootDatum minimal_realization(const GeneralizedCartanMatrix& C);

/// Loop-adapted realization of affinize(C_finite): dimH = l + 2 with
/// coordinates (h_1..h_l, c, d).
RootDatum affine_realization(const GeneralizedCartanMatrix& finite_C);

/// Sub-root datum: inner (C', J) included in outer (C, I) via iota, with an
/// injective linear s: H' -> H carrying h'_i to h_{iota(i)} and pulling
/// alpha_{iota(i)} back to alpha'_i. Validated on construction.
struct SubRootDatum {
  RootDatum inner;
  RootDatum outer;
  std::vector<int> iota;                  // J -> I
  std::vector<std::vector<Rational>> s;   // dimH_outer x dimH_inner
  std::vector<int> deleted;               // D = I \ iota(J)
};

SubRootDatum make_subdatum(RootDatum inner, RootDatum outer, std::vector<int> iota,
                           std::vector<std::vector<Rational>> s);

/// The affinization sub-root datum C in affinize(C), iota(i) = i, D = {0}.
SubRootDatum affinization_subdatum(const GeneralizedCartanMatrix& finite_C);

/// Node-deletion sub-root datum: J = I minus the deleted indices.
SubRootDatum node_deletion_subdatum(const GeneralizedCartanMatrix& C,
                                    const std::vector<int>& deleted_nodes);

/// Z-grading of the generators induced by a sub-root datum:
/// deg e_i = chi_D(i), deg f_i = -chi_D(i), deg of the Cartan = 0.
/// Returned as the vector (chi_D(i))_{i in I}.
std::vector<int> grading_from_subdatum(const SubRootDatum& sd);

} // namespace kmbraid

#endif
