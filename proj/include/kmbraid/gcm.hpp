#ifndef KMBRAID_GCM_HPP
#define KMBRAID_GCM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kmbraid/rational.hpp"

namespace kmbraid {

/// Generalized Cartan matrix under the convention alpha_j(h_i) = C_ij.
/// Validated on construction: C_ii = 2, off-diagonal entries <= 0,
/// symmetric zero pattern.
struct GeneralizedCartanMatrix {
  int n = 0;
  std::vector<std::vector<int>> entries;
  std::vector<std::string> labels; // index labels used in output ("1",... or "0","1",...)

  int at(int i, int j) const { return entries[i][j]; }
};

GeneralizedCartanMatrix validate_gcm(std::vector<std::vector<int>> entries,
                                     std::vector<std::string> labels = {});

/// Positive diagonal D with C*D symmetric, scaled to the smallest positive
/// integers (componentwise for reducible matrices). The constraints are
/// d_j C_ij = d_i C_ji; NotSymmetrizable when they admit no positive solution.
struct Symmetrizer {
  std::vector<Rational> d;
};

Symmetrizer symmetrize(const GeneralizedCartanMatrix& C);

/// Positive diagonal k with diag(k)*C symmetric, minimal positive integers.
/// k_i is proportional to the half square length (alpha_i, alpha_i)/2; these
/// enter root-length ratios in the structure-constant relations.
std::vector<Rational> root_length_weights(const GeneralizedCartanMatrix& C);

int gcm_rank(const GeneralizedCartanMatrix& C);
bool is_symmetrizable(const GeneralizedCartanMatrix& C);
bool is_finite_type(const GeneralizedCartanMatrix& C);
bool is_irreducible(const GeneralizedCartanMatrix& C);

/// Highest root theta = sum a_i alpha_i and its coroot h_theta = sum c_i h_i
/// of a finite irreducible Cartan matrix.
struct HighestRootData {
  std::vector<int> a;
  std::vector<int> c;
};

HighestRootData highest_root(const GeneralizedCartanMatrix& C);

/// Untwisted affine matrix of a finite irreducible C, indexed {0,...,l} with
/// the lower-right block equal to C.
GeneralizedCartanMatrix affinize(const GeneralizedCartanMatrix& C);

/// Named series: "A1".."A4", "B2".."B4", "C2".."C4", "D4", "G2".
GeneralizedCartanMatrix named_gcm(std::string_view name);

} // namespace kmbraid

#endif
