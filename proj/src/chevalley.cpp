#include "kmbraid/chevalley.hpp"

#include <algorithm>

#include "kmbraid/tensor_ops.hpp"

namespace kmbraid {

namespace {

std::vector<int> diff_vec(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

bool all_nonneg(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

std::vector<int> negate_vec(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}

/// Exact square root of a perfect-square rational; nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  mpz_class num(q.numerator_str()), den(q.denominator_str());
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational::parse(rn.get_str()) / Rational::parse(rd.get_str());
}

} // namespace

std::shared_ptr<const ChevalleyAlgebra> ChevalleyAlgebra::build(const GeneralizedCartanMatrix& C,
                                                                std::string name) {
  if (!is_finite_type(C)) fail(Errc::NotFiniteType, "Chevalley basis needs a finite-type matrix");
  if (!is_irreducible(C)) fail(Errc::NotIrreducible, "Chevalley basis needs an irreducible matrix");
  if (C.n > 4) fail(Errc::RankTooLarge, "rank cap is 4 at desk scale");
  auto alg = std::shared_ptr<ChevalleyAlgebra>(new ChevalleyAlgebra());
  alg->datum_ = minimal_realization(C);
  alg->roots_ = RootSystem::enumerate(C);
  alg->symmetrizer_ = symmetrize(C);
  alg->highest_ = highest_root(C);
  alg->num_pos_ = alg->roots_.count_positive();
  alg->dim_ = 2 * alg->num_pos_ + C.n;
  alg->name_ = name.empty() ? "L(rank " + std::to_string(C.n) + ")" : std::move(name);
  alg->build_structure();
  return alg;
}

void ChevalleyAlgebra::build_structure() {
  const int l = rank();
  const int m = num_pos_;
  const auto& pos = roots_.positive;

  // --- extraspecial pairs and structure constants on positive pairs ---
  extra_eps_.assign(m, -1);
  extra_zeta_.assign(m, -1);
  auto pos_n = [&](int a, int b) -> Rational {
    auto it = pos_n_.find({a, b});
    if (it != pos_n_.end()) return it->second;
    auto rev = pos_n_.find({b, a});
    if (rev != pos_n_.end()) return -rev->second;
    return 0;
  };
  // N_{xi, -eta} for distinct positive roots xi, eta.
  auto mixed_n = [&](int xi, int eta) -> Rational {
    std::vector<int> diff = diff_vec(pos[xi], pos[eta]);
    if (all_nonneg(diff)) {
      int d = roots_.index_of(diff);
      if (d < 0) return 0;
      return roots_.half_norm(pos[d]) / roots_.half_norm(pos[xi]) * pos_n(d, eta);
    }
    std::vector<int> ndiff = negate_vec(diff);
    if (all_nonneg(ndiff)) {
      int d = roots_.index_of(ndiff);
      if (d < 0) return 0;
      return roots_.half_norm(pos[d]) / roots_.half_norm(pos[eta]) * pos_n(d, xi);
    }
    return 0;
  };

  for (int g = 0; g < m; ++g) {
    if (roots_.height_of(g) == 1) continue;
    // extraspecial pair: minimal eps in the canonical order with gamma - eps positive
    int eps = -1, zeta = -1;
    for (int cand = 0; cand < g; ++cand) {
      std::vector<int> rest = diff_vec(pos[g], pos[cand]);
      if (!all_nonneg(rest)) continue;
      int z = roots_.index_of(rest);
      if (z >= 0) {
        eps = cand;
        zeta = z;
        break;
      }
    }
    if (eps < 0) fail(Errc::Internal, "no extraspecial pair for a positive root");
    extra_eps_[g] = eps;
    extra_zeta_[g] = zeta;
    int p = roots_.string_down(pos[eps], pos[zeta]);
    pos_n_[{eps, zeta}] = p + 1;

    // remaining special pairs (alpha, beta), alpha < beta, alpha + beta = gamma
    for (int a = 0; a < g; ++a) {
      std::vector<int> rest = diff_vec(pos[g], pos[a]);
      if (!all_nonneg(rest)) continue;
      int b = roots_.index_of(rest);
      if (b < 0 || b <= a) continue;
      if (a == eps) continue; // the extraspecial pair itself
      // Jacobi against f_eps:
      //   N_{a,b} N_{g,-eps} = N_{b,-eps} N_{a,b-eps} + N_{a,-eps} N_{a-eps,b}
      Rational lhs_coeff = mixed_n(g, eps);
      if (lhs_coeff.is_zero()) fail(Errc::Internal, "vanishing extraspecial pivot");
      Rational rhs = 0;
      {
        std::vector<int> bme = diff_vec(pos[b], pos[eps]);
        int idx = all_nonneg(bme) ? roots_.index_of(bme) : -1;
        if (idx >= 0) rhs += mixed_n(b, eps) * pos_n(a, idx);
      }
      {
        std::vector<int> ame = diff_vec(pos[a], pos[eps]);
        int idx = all_nonneg(ame) ? roots_.index_of(ame) : -1;
        if (idx >= 0) rhs += mixed_n(a, eps) * pos_n(idx, b);
      }
      Rational n_ab = rhs / lhs_coeff;
      int p_ab = roots_.string_down(pos[a], pos[b]);
      Rational expect(p_ab + 1);
      if (n_ab != expect && n_ab != -expect)
        fail(Errc::Internal, "structure constant fails Chevalley integrality");
      pos_n_[{a, b}] = n_ab;
    }
  }

  // --- bracket table ---
  auto e_idx = [&](int g) { return g; };
  auto h_idx = [&](int i) { return m + i; };
  auto f_idx = [&](int g) { return m + l + g; };

  auto coroot_combo = [&](int g) {
    LieElement h(*this);
    Rational kg = roots_.half_norm(pos[g]);
    for (int i = 0; i < l; ++i) {
      Rational ci = Rational(pos[g][i]) * roots_.k[i] / kg;
      h.add_term(BasisSymbol::finite(h_idx(i)), ci);
      if (ci.denominator_str() != "1") fail(Errc::Internal, "non-integral coroot");
    }
    return h;
  };

  table_.assign(dim_, std::vector<LieElement>(dim_, LieElement(*this)));
  auto set_pair = [&](int a, int b, LieElement v) {
    table_[b][a] = -v;
    table_[a][b] = std::move(v);
  };
  for (int i = 0; i < l; ++i) {
    for (int g = 0; g < m; ++g) {
      int w = roots_.pairing_with_coroot(pos[g], i);
      LieElement ve(*this), vf(*this);
      ve.add_term(BasisSymbol::finite(e_idx(g)), w);
      vf.add_term(BasisSymbol::finite(f_idx(g)), -w);
      set_pair(h_idx(i), e_idx(g), std::move(ve));
      set_pair(h_idx(i), f_idx(g), std::move(vf));
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a < b) {
        std::vector<int> sum = pos[a];
        for (int i = 0; i < l; ++i) sum[i] += pos[b][i];
        int s = roots_.index_of(sum);
        LieElement ve(*this), vf(*this);
        if (s >= 0) {
          Rational n = pos_n(a, b);
          ve.add_term(BasisSymbol::finite(e_idx(s)), n);
          vf.add_term(BasisSymbol::finite(f_idx(s)), -n);
        }
        set_pair(e_idx(a), e_idx(b), std::move(ve));
        set_pair(f_idx(a), f_idx(b), std::move(vf));
      }
      // [e_a, f_b]
      if (a == b) {
        set_pair(e_idx(a), f_idx(a), coroot_combo(a));
      } else {
        LieElement v(*this);
        std::vector<int> diff = diff_vec(pos[a], pos[b]);
        if (all_nonneg(diff)) {
          int d = roots_.index_of(diff);
          if (d >= 0) v.add_term(BasisSymbol::finite(e_idx(d)), mixed_n(a, b));
        } else {
          std::vector<int> nd = negate_vec(diff);
          if (all_nonneg(nd)) {
            int d = roots_.index_of(nd);
            if (d >= 0) v.add_term(BasisSymbol::finite(f_idx(d)), mixed_n(a, b));
          }
        }
        set_pair(e_idx(a), f_idx(b), std::move(v));
      }
    }
  }

  // --- names ---
  names_.assign(dim_, "");
  for (int g = 0; g < m; ++g) {
    std::string asc, desc;
    for (int i = 0; i < l; ++i)
      for (int r = 0; r < pos[g][i]; ++r) asc += std::to_string(i + 1);
    for (int i = l - 1; i >= 0; --i)
      for (int r = 0; r < pos[g][i]; ++r) desc += std::to_string(i + 1);
    names_[e_idx(g)] = "E" + asc;
    names_[f_idx(g)] = "F" + desc;
  }
  for (int i = 0; i < l; ++i) names_[h_idx(i)] = "H" + std::to_string(i + 1);
  for (int i = 0; i < dim_; ++i) name_index_.emplace(names_[i], i);

  // --- invariant form: Killing rescaled so <h_theta, h_theta> = 2 ---
  std::vector<std::vector<Rational>> killing(dim_, std::vector<Rational>(dim_, Rational(0)));
  for (int s = 0; s < dim_; ++s)
    for (int t = s; t < dim_; ++t) {
      Rational tr = 0;
      for (int u = 0; u < dim_; ++u) {
        // coefficient of u in [s, [t, u]]
        for (const auto& [z, cz] : table_[t][u].terms()) {
          tr += cz * table_[s][z.index].coeff(BasisSymbol::finite(u));
        }
      }
      killing[s][t] = tr;
      killing[t][s] = tr;
    }
  Rational khh = 0;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      khh += Rational(highest_.c[i]) * Rational(highest_.c[j]) * killing[h_idx(i)][h_idx(j)];
  if (khh.is_zero()) fail(Errc::Internal, "degenerate Killing form on h_theta");
  Rational scale = Rational(2) / khh;
  gram_.assign(dim_, std::vector<Rational>(dim_, Rational(0)));
  for (int s = 0; s < dim_; ++s)
    for (int t = 0; t < dim_; ++t) gram_[s][t] = scale * killing[s][t];

  // --- omega involution ---
  omega_.assign(dim_, LieElement(*this));
  for (int i = 0; i < l; ++i) {
    omega_[h_idx(i)].add_term(BasisSymbol::finite(h_idx(i)), -1);
  }
  for (int g = 0; g < m; ++g) {
    if (roots_.height_of(g) == 1) {
      omega_[e_idx(g)].add_term(BasisSymbol::finite(f_idx(g)), -1);
      omega_[f_idx(g)].add_term(BasisSymbol::finite(e_idx(g)), -1);
      continue;
    }
    int eps = extra_eps_[g], zeta = extra_zeta_[g];
    Rational n = pos_n(eps, zeta);
    // e_g = (1/n) [e_eps, e_zeta], f_g = -(1/n) [f_eps, f_zeta]
    LieElement oe = bracket(omega_[e_idx(eps)], omega_[e_idx(zeta)]);
    oe *= Rational(1) / n;
    LieElement of = bracket(omega_[f_idx(eps)], omega_[f_idx(zeta)]);
    of *= Rational(-1) / n;
    omega_[e_idx(g)] = std::move(oe);
    omega_[f_idx(g)] = std::move(of);
  }

  // --- theta vectors ---
  {
    int theta = m - 1;
    if (pos[theta] != highest_.a) fail(Errc::Internal, "highest root is not last in order");
    BasisSymbol et = BasisSymbol::finite(e_idx(theta));
    BasisSymbol ft = BasisSymbol::finite(f_idx(theta));
    Rational g_ef = gram_[et.index][ft.index];
    Rational sigma = omega_[et.index].coeff(ft); // omega(e_theta) = sigma f_theta
    if (sigma.is_zero() || omega_[et.index].term_count() != 1)
      fail(Errc::Internal, "omega does not map the highest root space to the lowest");
    // F0 = lambda e_theta, E0 = mu f_theta with lambda mu <e,f> = 1 and
    // omega(F0) = -E0, i.e. mu = -lambda sigma; fix lambda > 0.
    Rational lam_sq = Rational(-1) / (sigma * g_ef);
    auto lam = rational_sqrt(lam_sq);
    if (!lam) fail(Errc::NormalizationFailure, "theta-vector normalization is not rational");
    Rational mu = -(*lam) * sigma;
    f0_ = LieElement(*this);
    f0_.add_term(et, *lam);
    e0_ = LieElement(*this);
    e0_.add_term(ft, mu);
    h_theta_ = bracket(f0_, e0_);
    // sanity: [H_theta, F0] = 2 F0 and the normalization clauses
    if (bracket(h_theta_, f0_) != Rational(2) * f0_)
      fail(Errc::Internal, "H_theta does not act as 2 on the highest root vector");
    if (form(f0_, e0_) != Rational(1)) fail(Errc::Internal, "<F0,E0> != 1");
    if (omega(f0_) != -e0_) fail(Errc::Internal, "omega(F0) != -E0");
  }
}

int ChevalleyAlgebra::weight_at_coroot(BasisSymbol s, int i) const {
  if (is_h(s)) return 0;
  int w = roots_.pairing_with_coroot(roots_.positive[root_index(s)], i);
  return is_e(s) ? w : -w;
}

LieElement ChevalleyAlgebra::omega(const LieElement& x) const {
  LieElement out(*this);
  for (const auto& [s, c] : x.terms()) {
    LieElement part = omega_[s.index];
    part *= c;
    out += part;
  }
  return out;
}

LieElement ChevalleyAlgebra::bracket_basis(BasisSymbol a, BasisSymbol b) const {
  return table_[a.index][b.index];
}

Rational ChevalleyAlgebra::form_basis(BasisSymbol a, BasisSymbol b) const {
  return gram_[a.index][b.index];
}

bool ChevalleyAlgebra::has_symbol(BasisSymbol s) const {
  return s.kind == BasisSymbol::Kind::Finite && s.index >= 0 && s.index < dim_;
}

std::string ChevalleyAlgebra::symbol_name(BasisSymbol s) const { return names_.at(s.index); }

std::optional<BasisSymbol> ChevalleyAlgebra::symbol_named(std::string_view nm) const {
  auto it = name_index_.find(nm);
  if (it == name_index_.end()) return std::nullopt;
  return BasisSymbol::finite(it->second);
}

std::vector<BasisSymbol> ChevalleyAlgebra::basis_window(int, int) const {
  std::vector<BasisSymbol> out;
  for (int i = 0; i < dim_; ++i) out.push_back(BasisSymbol::finite(i));
  return out;
}

bool ChevalleyAlgebra::is_delta_generator(BasisSymbol s) const {
  return is_h(s) || roots_.height_of(root_index(s)) == 1;
}

TensorElement ChevalleyAlgebra::generator_delta(BasisSymbol s) const {
  if (!is_delta_generator(s)) fail(Errc::Internal, "not a cobracket generator");
  if (is_h(s)) return TensorElement(*this);
  int i = -1;
  const auto& root = roots_.positive[root_index(s)];
  for (int t = 0; t < rank(); ++t)
    if (root[t] == 1) i = t;
  // delta e_i = (d_i/2) e_i ^ h_i, and the same sign for f_i. The weights
  // are the half square lengths (diag(d) C symmetric): the cocycle extension
  // is certificate-independent only for that orientation, and it agrees with
  // the C D convention on every symmetric Cartan matrix.
  Rational c = roots_.k[i] * half();
  return c * wedge(basis_element(s), basis_element(h_symbol(i)));
}

Certificate ChevalleyAlgebra::certificate(BasisSymbol s) const {
  if (is_delta_generator(s)) fail(Errc::CertificateNotFound, "generators carry no certificate");
  int g = root_index(s);
  int eps = extra_eps_[g], zeta = extra_zeta_[g];
  Rational n = pos_n_.at({eps, zeta});
  Certificate cert;
  if (is_e(s)) {
    cert.pairs.emplace_back(Rational(1) / n, e_symbol(eps), e_symbol(zeta));
  } else {
    cert.pairs.emplace_back(Rational(-1) / n, f_symbol(eps), f_symbol(zeta));
  }
  return cert;
}

} // namespace kmbraid
