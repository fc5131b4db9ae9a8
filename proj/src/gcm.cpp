#include "kmbraid/gcm.hpp"

#include <algorithm>
#include <numeric>

#include "kmbraid/roots.hpp"

namespace kmbraid {

namespace {

std::string entry_name(const GeneralizedCartanMatrix& C, int i, int j) {
  return "(" + C.labels[i] + "," + C.labels[j] + ")";
}

/// Exact rank by Gaussian elimination over the rationals.
int rational_rank(std::vector<std::vector<Rational>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[rank][col];
      for (int c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    ++rank;
  }
  return rank;
}

/// Solves x_j W_ij = x_i W_ji for positive x, minimal positive integers per
/// connected component of the nonzero pattern. Returns empty on failure.
std::vector<Rational> solve_diagonal(const GeneralizedCartanMatrix& C, bool left) {
  int n = C.n;
  // left=false solves d_j C_ij = d_i C_ji (C*D symmetric);
  // left=true  solves k_i C_ij = k_j C_ji (diag(k)*C symmetric).
  std::vector<Rational> x(n, Rational(0));
  std::vector<int> comp(n, -1);
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = start;
    x[start] = 1;
    std::vector<int> stack{start};
    std::vector<int> members{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || C.at(i, j) == 0) continue;
        // left: k_i C_ij = k_j C_ji gives k_j = k_i C_ij / C_ji;
        // right: d_j C_ij = d_i C_ji gives d_j = d_i C_ji / C_ij.
        Rational ratio = left ? Rational(C.at(i, j)) / Rational(C.at(j, i))
                              : Rational(C.at(j, i)) / Rational(C.at(i, j));
        Rational want = x[i] * ratio;
        if (comp[j] < 0) {
          comp[j] = start;
          x[j] = want;
          stack.push_back(j);
          members.push_back(j);
        } else if (x[j] != want) {
          return {};
        }
      }
    }
    // scale this component to minimal positive integers
    mpz_class num_gcd = 0, den_lcm = 1;
    for (int i : members) {
      Rational v = x[i];
      if (v <= Rational(0)) return {};
      mpz_class nu(v.numerator_str());
      mpz_class de(v.denominator_str());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nu.get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), de.get_mpz_t());
    }
    Rational scale = Rational::parse(den_lcm.get_str()) / Rational::parse(num_gcd.get_str());
    for (int i : members) x[i] *= scale;
  }
  return x;
}

} // namespace

GeneralizedCartanMatrix validate_gcm(std::vector<std::vector<int>> entries,
                                     std::vector<std::string> labels) {
  GeneralizedCartanMatrix C;
  C.n = static_cast<int>(entries.size());
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != C.n)
      fail(Errc::Internal, "Cartan matrix must be square");
  C.entries = std::move(entries);
  if (labels.empty())
    for (int i = 0; i < C.n; ++i) labels.push_back(std::to_string(i + 1));
  if (static_cast<int>(labels.size()) != C.n) fail(Errc::Internal, "label count mismatch");
  C.labels = std::move(labels);

  for (int i = 0; i < C.n; ++i) {
    if (C.at(i, i) != 2)
      fail(Errc::DiagonalNotTwo, "diagonal entry " + entry_name(C, i, i) + " is not 2");
    for (int j = 0; j < C.n; ++j) {
      if (i == j) continue;
      if (C.at(i, j) > 0)
        fail(Errc::PositiveOffDiagonal, "entry " + entry_name(C, i, j) + " is positive");
      if ((C.at(i, j) == 0) != (C.at(j, i) == 0))
        fail(Errc::AsymmetricZeroPattern,
             "zero pattern differs at " + entry_name(C, i, j) + "/" + entry_name(C, j, i));
    }
  }
  return C;
}

Symmetrizer symmetrize(const GeneralizedCartanMatrix& C) {
  auto d = solve_diagonal(C, /*left=*/false);
  if (d.empty()) fail(Errc::NotSymmetrizable, "no positive diagonal D with C*D symmetric");
  return Symmetrizer{std::move(d)};
}

std::vector<Rational> root_length_weights(const GeneralizedCartanMatrix& C) {
  auto k = solve_diagonal(C, /*left=*/true);
  if (k.empty()) fail(Errc::NotSymmetrizable, "no positive diagonal k with diag(k)*C symmetric");
  return k;
}

bool is_symmetrizable(const GeneralizedCartanMatrix& C) {
  return !solve_diagonal(C, false).empty();
}

int gcm_rank(const GeneralizedCartanMatrix& C) {
  std::vector<std::vector<Rational>> m(C.n, std::vector<Rational>(C.n, Rational(0)));
  for (int i = 0; i < C.n; ++i)
    for (int j = 0; j < C.n; ++j) m[i][j] = C.at(i, j);
  return rational_rank(std::move(m));
}

bool is_finite_type(const GeneralizedCartanMatrix& C) {
  auto k = solve_diagonal(C, true);
  if (k.empty()) return false;
  // diag(k)*C is symmetric; finite type iff it is positive definite
  // (leading principal minors all positive, exact arithmetic).
  std::vector<std::vector<Rational>> b(C.n, std::vector<Rational>(C.n, Rational(0)));
  for (int i = 0; i < C.n; ++i)
    for (int j = 0; j < C.n; ++j) b[i][j] = k[i] * Rational(C.at(i, j));
  for (int lead = 1; lead <= C.n; ++lead) {
    // determinant of leading lead x lead block by fraction-free-ish elimination
    std::vector<std::vector<Rational>> m(lead, std::vector<Rational>(lead, Rational(0)));
    for (int i = 0; i < lead; ++i)
      for (int j = 0; j < lead; ++j) m[i][j] = b[i][j];
    Rational det = 1;
    for (int col = 0; col < lead; ++col) {
      int pivot = -1;
      for (int r = col; r < lead; ++r)
        if (!m[r][col].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return false; // singular
      if (pivot != col) {
        std::swap(m[pivot], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (int r = col + 1; r < lead; ++r) {
        if (m[r][col].is_zero()) continue;
        Rational f = m[r][col] / m[col][col];
        for (int c2 = col; c2 < lead; ++c2) m[r][c2] -= f * m[col][c2];
      }
    }
    if (det <= Rational(0)) return false;
  }
  return true;
}

bool is_irreducible(const GeneralizedCartanMatrix& C) {
  if (C.n == 0) return false;
  std::vector<bool> seen(C.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < C.n; ++j)
      if (!seen[j] && C.at(i, j) != 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == C.n;
}

HighestRootData highest_root(const GeneralizedCartanMatrix& C) {
  if (!is_finite_type(C)) fail(Errc::NotFiniteType, "highest root needs a finite-type matrix");
  RootSystem rs = RootSystem::enumerate(C);
  // theta is the coefficient-wise maximum over all roots
  std::vector<int> a(C.n, 0);
  for (const auto& root : rs.positive)
    for (int i = 0; i < C.n; ++i) a[i] = std::max(a[i], root[i]);
  if (!rs.is_positive_root(a))
    fail(Errc::NotIrreducible, "coefficient-wise maximum is not a root (matrix reducible?)");
  // h_theta = sum c_i h_i with c_i = a_i k_i / k_theta
  Rational k_theta = rs.half_norm(a);
  HighestRootData out;
  out.a = a;
  for (int i = 0; i < C.n; ++i) {
    Rational ci = Rational(a[i]) * rs.k[i] / k_theta;
    if (ci.denominator_str() != "1") fail(Errc::Internal, "non-integral coroot coefficient");
    out.c.push_back(static_cast<int>(std::stol(ci.numerator_str())));
  }
  return out;
}

GeneralizedCartanMatrix affinize(const GeneralizedCartanMatrix& C) {
  if (!is_finite_type(C)) fail(Errc::NotFiniteType, "affinization needs a finite-type matrix");
  if (!is_irreducible(C)) fail(Errc::NotIrreducible, "affinization needs an irreducible matrix");
  HighestRootData hr = highest_root(C);
  int l = C.n;
  std::vector<std::vector<int>> e(l + 1, std::vector<int>(l + 1, 0));
  e[0][0] = 2;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) e[i][j] = C.at(i - 1, j - 1);
  for (int i = 1; i <= l; ++i) {
    int s = 0;
    for (int j = 1; j <= l; ++j) s += hr.a[j - 1] * C.at(i - 1, j - 1);
    e[i][0] = -s;
  }
  for (int j = 1; j <= l; ++j) {
    int s = 0;
    for (int i = 1; i <= l; ++i) s += hr.c[i - 1] * C.at(i - 1, j - 1);
    e[0][j] = -s;
  }
  std::vector<std::string> labels{"0"};
  for (const auto& lab : C.labels) labels.push_back(lab);
  return validate_gcm(std::move(e), std::move(labels));
}

GeneralizedCartanMatrix named_gcm(std::string_view name) {
  auto series = [&](char s, int l) -> GeneralizedCartanMatrix {
    std::vector<std::vector<int>> e(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) e[i][i] = 2;
    auto chain = [&](int i, int j) { e[i][j] = e[j][i] = -1; };
    switch (s) {
      case 'A':
        for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
        break;
      case 'B': // convention C_ij = alpha_j(h_i); B2 = [[2,-2],[-1,2]]
        for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
        e[0][1] = -2;
        if (l < 2) fail(Errc::UnknownAlgebra, "B needs rank >= 2");
        break;
      case 'C':
        for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
        e[1][0] = -2;
        if (l < 2) fail(Errc::UnknownAlgebra, "C needs rank >= 2");
        break;
      case 'D':
        if (l < 4) fail(Errc::UnknownAlgebra, "D needs rank >= 4");
        for (int i = 0; i + 1 < l - 1; ++i) chain(i, i + 1);
        chain(l - 3, l - 1);
        break;
      case 'G':
        if (l != 2) fail(Errc::UnknownAlgebra, "G needs rank 2");
        e[0][1] = -1;
        e[1][0] = -3;
        break;
      default:
        fail(Errc::UnknownAlgebra, "unknown series");
    }
    return validate_gcm(std::move(e));
  };
  if (name.size() == 2 && name[1] >= '1' && name[1] <= '9') {
    int l = name[1] - '0';
    char s = name[0];
    if (s == 'A' || s == 'B' || s == 'C' || s == 'D' || s == 'G') {
      if (l > 4) fail(Errc::RankTooLarge, "rank cap is 4 at desk scale");
      if ((s == 'A' && l >= 1) || ((s == 'B' || s == 'C') && l >= 2) || (s == 'D' && l == 4) ||
          (s == 'G' && l == 2))
        return series(s, l);
    }
  }
  fail(Errc::UnknownAlgebra, "unknown Cartan type '" + std::string(name) + "'");
}

} // namespace kmbraid
