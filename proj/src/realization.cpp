#include "kmbraid/realization.hpp"

#include <algorithm>

namespace kmbraid {

namespace {

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

void check_datum(const RootDatum& d) {
  int n = d.C.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.root_at_coroot(j, i) != Rational(d.C.at(i, j)))
        fail(Errc::Internal, "realization violates alpha_j(h_i) = C_ij");
  if (rational_rank(d.coroots) != n) fail(Errc::Internal, "coroots not independent");
  if (rational_rank(d.roots) != n) fail(Errc::Internal, "roots not independent");
}

} // namespace

Rational RootDatum::root_at_coroot(int j, int i) const { return eval_root(j, coroots[i]); }

Rational RootDatum::eval_root(int j, const std::vector<Rational>& h) const {
  Rational s = 0;
  for (int t = 0; t < dimH; ++t) s += roots[j][t] * h[t];
  return s;
}

RootDatum minimal_realization(const GeneralizedCartanMatrix& C) {
  RootDatum d;
  d.C = C;
  int n = C.n;
  int r = gcm_rank(C);
  d.dimH = 2 * n - r;
  // Coroots: standard basis vectors.
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> h(d.dimH, Rational(0));
    h[i] = 1;
    d.coroots.push_back(std::move(h));
  }
  // Roots: the n columns of C on the first n coordinates, completed to an
  // independent family with the extra n - r coordinates assigned greedily
  // to the columns that are dependent on their predecessors.
  std::vector<std::vector<Rational>> cols;
  int next_extra = n;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> a(d.dimH, Rational(0));
    for (int i = 0; i < n; ++i) a[i] = C.at(i, j);
    cols.push_back(a);
    if (rational_rank(cols) < static_cast<int>(cols.size())) {
      if (next_extra >= d.dimH) fail(Errc::Internal, "realization completion overflow");
      cols.back()[next_extra++] = 1;
    }
    d.roots.push_back(cols.back());
  }
  check_datum(d);
  return d;
}

RootDatum affine_realization(const GeneralizedCartanMatrix& finite_C) {
  GeneralizedCartanMatrix tilde = affinize(finite_C);
  HighestRootData hr = highest_root(finite_C);
  int l = finite_C.n;
  RootDatum d;
  d.C = tilde;
  d.dimH = l + 2; // (h_1..h_l, c, d)
  d.affine_layout = true;
  // h_0 = -h_theta + c, h_i = e_i for i >= 1
  {
    std::vector<Rational> h0(d.dimH, Rational(0));
    for (int i = 0; i < l; ++i) h0[i] = Rational(-hr.c[i]);
    h0[l] = 1;
    d.coroots.push_back(std::move(h0));
  }
  for (int i = 0; i < l; ++i) {
    std::vector<Rational> h(d.dimH, Rational(0));
    h[i] = 1;
    d.coroots.push_back(std::move(h));
  }
  // alpha_0 = -theta + (d-coordinate); alpha_j for j >= 1 is the finite
  // column extended by zero on c and d.
  {
    std::vector<Rational> a0(d.dimH, Rational(0));
    for (int i = 0; i < l; ++i) {
      Rational v = 0;
      for (int j = 0; j < l; ++j) v -= Rational(hr.a[j]) * Rational(finite_C.at(i, j));
      a0[i] = v; // -theta(h_i)
    }
    a0[l + 1] = 1;
    d.roots.push_back(std::move(a0));
  }
  for (int j = 0; j < l; ++j) {
    std::vector<Rational> a(d.dimH, Rational(0));
    for (int i = 0; i < l; ++i) a[i] = finite_C.at(i, j);
    d.roots.push_back(std::move(a));
  }
  check_datum(d);
  return d;
}

SubRootDatum make_subdatum(RootDatum inner, RootDatum outer, std::vector<int> iota,
                           std::vector<std::vector<Rational>> s) {
  SubRootDatum sd;
  sd.inner = std::move(inner);
  sd.outer = std::move(outer);
  sd.iota = std::move(iota);
  sd.s = std::move(s);

  int nj = sd.inner.C.n;
  int ni = sd.outer.C.n;
  std::vector<bool> hit(ni, false);
  for (int j : sd.iota) {
    if (j < 0 || j >= ni || hit[j]) fail(Errc::Internal, "iota is not injective into I");
    hit[j] = true;
  }
  for (int i = 0; i < nj; ++i)
    for (int j = 0; j < nj; ++j)
      if (sd.inner.C.at(i, j) != sd.outer.C.at(sd.iota[i], sd.iota[j]))
        fail(Errc::Internal, "sub-root datum violates C'_ij = C_{iota(i) iota(j)}");

  auto apply_s = [&](const std::vector<Rational>& v) {
    std::vector<Rational> out(sd.outer.dimH, Rational(0));
    for (int r = 0; r < sd.outer.dimH; ++r)
      for (int c = 0; c < sd.inner.dimH; ++c) out[r] += sd.s[r][c] * v[c];
    return out;
  };
  if (rational_rank(sd.s) != sd.inner.dimH) fail(Errc::Internal, "s is not injective");
  for (int i = 0; i < nj; ++i) {
    if (apply_s(sd.inner.coroots[i]) != sd.outer.coroots[sd.iota[i]])
      fail(Errc::Internal, "s(h'_i) != h_{iota(i)}");
    // s^*(alpha_{iota(i)}) = alpha'_i: alpha_{iota(i)}(s(h)) = alpha'_i(h) on a basis of H'
    for (int c = 0; c < sd.inner.dimH; ++c) {
      std::vector<Rational> basis_vec(sd.inner.dimH, Rational(0));
      basis_vec[c] = 1;
      Rational lhs = sd.outer.eval_root(sd.iota[i], apply_s(basis_vec));
      if (lhs != sd.inner.roots[i][c]) fail(Errc::Internal, "s^*(alpha'_i) != alpha_{iota(i)}");
    }
  }

  for (int i = 0; i < ni; ++i)
    if (!hit[i]) sd.deleted.push_back(i);
  return sd;
}

SubRootDatum affinization_subdatum(const GeneralizedCartanMatrix& finite_C) {
  RootDatum outer = affine_realization(finite_C);
  RootDatum inner = minimal_realization(finite_C);
  int l = finite_C.n;
  std::vector<int> iota;
  for (int i = 0; i < l; ++i) iota.push_back(i + 1); // delete the extending node 0
  std::vector<std::vector<Rational>> s(outer.dimH, std::vector<Rational>(inner.dimH, Rational(0)));
  for (int i = 0; i < l; ++i) s[i][i] = 1;
  return make_subdatum(std::move(inner), std::move(outer), std::move(iota), std::move(s));
}

SubRootDatum node_deletion_subdatum(const GeneralizedCartanMatrix& C,
                                    const std::vector<int>& deleted_nodes) {
  std::vector<int> iota;
  for (int i = 0; i < C.n; ++i)
    if (std::find(deleted_nodes.begin(), deleted_nodes.end(), i) == deleted_nodes.end())
      iota.push_back(i);
  if (iota.empty()) fail(Errc::Internal, "node deletion removed every index");
  std::vector<std::vector<int>> sub;
  std::vector<std::string> labels;
  for (int i : iota) {
    std::vector<int> row;
    for (int j : iota) row.push_back(C.at(i, j));
    sub.push_back(std::move(row));
    labels.push_back(C.labels[i]);
  }
  RootDatum inner = minimal_realization(validate_gcm(std::move(sub), std::move(labels)));
  RootDatum outer = minimal_realization(C);
  // s maps the inner coordinates onto the corresponding outer ones: coroot
  // columns first, then the derivation directions matched greedily so that
  // the pullback condition holds.
  std::vector<std::vector<Rational>> s(outer.dimH, std::vector<Rational>(inner.dimH, Rational(0)));
  for (int a = 0; a < static_cast<int>(iota.size()); ++a) s[iota[a]][a] = 1;
  // For finite-type inner/outer data (the only node-deletion instances used
  // at desk scale) the coroot columns already satisfy both conditions.
  return make_subdatum(std::move(inner), std::move(outer), std::move(iota), std::move(s));
}

std::vector<int> grading_from_subdatum(const SubRootDatum& sd) {
  std::vector<int> deg(sd.outer.C.n, 0);
  for (int i : sd.deleted) deg[i] = 1;
  return deg;
}

} // namespace kmbraid
