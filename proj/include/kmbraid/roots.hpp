#ifndef KMBRAID_ROOTS_HPP
#define KMBRAID_ROOTS_HPP

#include <map>
#include <vector>

#include "kmbraid/gcm.hpp"

namespace kmbraid {

/// Root system of a finite-type Cartan matrix, as integer coefficient
/// vectors over the simple roots. Positive roots are kept in the canonical
/// order: by height, then by descending lexicographic coefficients (alpha_1
/// before alpha_2). The order is fixed at construction; the Chevalley basis
/// and all golden files depend on it.
class RootSystem {
public:
  static RootSystem enumerate(const GeneralizedCartanMatrix& C);

  int rank() const { return static_cast<int>(k.size()); }
  int count_positive() const { return static_cast<int>(positive.size()); }

  bool is_positive_root(const std::vector<int>& v) const { return index.count(v) > 0; }
  /// Positive or negative root.
  bool is_root(const std::vector<int>& v) const;
  /// Index of a positive root in the canonical order; -1 if not a root.
  int index_of(const std::vector<int>& v) const {
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
  }

  int height_of(int idx) const { return heights[idx]; }

  /// (gamma, gamma)/2 in the minimal-integer length normalization of k.
  Rational half_norm(const std::vector<int>& v) const;

  /// gamma(h_i) = sum_j v_j C_ij.
  int pairing_with_coroot(const std::vector<int>& v, int i) const;

  /// Largest p >= 0 with beta - p*alpha still a root (alpha, beta positive).
  int string_down(const std::vector<int>& alpha, const std::vector<int>& beta) const;

  std::vector<std::vector<int>> positive;
  std::vector<int> heights;
  std::map<std::vector<int>, int> index;
  std::vector<Rational> k; // half square lengths of the simple roots
  GeneralizedCartanMatrix cartan;
};

} // namespace kmbraid

#endif
