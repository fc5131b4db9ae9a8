#include "kmbraid/roots.hpp"

#include <algorithm>
#include <numeric>

namespace kmbraid {

namespace {

int height(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// height ascending, then descending lexicographic (so alpha_1 < alpha_2).
bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

} // namespace

RootSystem RootSystem::enumerate(const GeneralizedCartanMatrix& C) {
  if (!is_finite_type(C)) fail(Errc::NotFiniteType, "root enumeration needs finite type");
  RootSystem rs;
  rs.cartan = C;
  rs.k = root_length_weights(C);

  int n = C.n;
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 1;
    level.push_back(a);
    seen.emplace(a, 0);
  }
  std::vector<std::vector<int>> all(level);
  // Grow by root strings: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0,
  // where p is the length of the descending string (already enumerated).
  const int kHeightGuard = 64;
  for (int h = 1; !level.empty(); ++h) {
    if (h > kHeightGuard) fail(Errc::NotFiniteType, "root enumeration did not terminate");
    std::vector<std::vector<int>> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        std::vector<int> down = beta;
        int p = 0;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * C.at(i, j);
        int q = p - pairing;
        if (q > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!seen.count(up)) {
            seen.emplace(up, 0);
            next.push_back(up);
            all.push_back(up);
          }
        }
      }
    }
    level = std::move(next);
  }

  std::sort(all.begin(), all.end(), canonical_less);
  rs.positive = std::move(all);
  for (int idx = 0; idx < static_cast<int>(rs.positive.size()); ++idx) {
    rs.index.emplace(rs.positive[idx], idx);
    rs.heights.push_back(height(rs.positive[idx]));
  }
  return rs;
}

Rational RootSystem::half_norm(const std::vector<int>& v) const {
  // (gamma, gamma)/2 = (1/2) v^T diag(k) C v
  int n = cartan.n;
  Rational s = 0;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      s += Rational(v[i]) * k[i] * Rational(cartan.at(i, j)) * Rational(v[j]);
  }
  return s * half();
}

int RootSystem::pairing_with_coroot(const std::vector<int>& v, int i) const {
  int s = 0;
  for (int j = 0; j < cartan.n; ++j) s += v[j] * cartan.at(i, j);
  return s;
}

bool RootSystem::is_root(const std::vector<int>& v) const {
  bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
  if (nonneg) return index.count(v) > 0; // excludes the zero vector
  bool nonpos = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
  if (!nonpos) return false;
  std::vector<int> neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  return index.count(neg) > 0;
}

// The alpha-string through beta may pass into the negative roots; p counts
// every unbroken step down.
int RootSystem::string_down(const std::vector<int>& alpha, const std::vector<int>& beta) const {
  int p = 0;
  std::vector<int> cur = beta;
  while (true) {
    for (int i = 0; i < cartan.n; ++i) cur[i] -= alpha[i];
    if (!is_root(cur)) break;
    ++p;
  }
  return p;
}

} // namespace kmbraid
