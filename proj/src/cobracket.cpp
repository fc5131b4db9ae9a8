#include "kmbraid/cobracket.hpp"

#include "kmbraid/render.hpp"

namespace kmbraid {

TensorElement CobracketTable::delta_symbol(BasisSymbol s) const {
  {
    std::scoped_lock lock(mu_);
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
  }
  TensorElement value(*alg_);
  if (alg_->is_delta_generator(s)) {
    value = alg_->generator_delta(s);
  } else {
    Certificate cert = alg_->certificate(s);
    for (const auto& [coeff, x, y] : cert.pairs) {
      LieElement ex = alg_->basis_element(x);
      LieElement ey = alg_->basis_element(y);
      TensorElement part = ad_tensor(ex, delta_symbol(y)) - ad_tensor(ey, delta_symbol(x));
      part *= coeff;
      value += part;
    }
  }
  std::scoped_lock lock(mu_);
  auto [it, inserted] = memo_.emplace(s, std::move(value));
  return it->second;
}

TensorElement CobracketTable::delta(const LieElement& x) const {
  TensorElement out(*alg_);
  for (const auto& [s, c] : x.terms()) {
    TensorElement part = delta_symbol(s);
    part *= c;
    out += part;
  }
  return out;
}

TensorElement coboundary(const TensorElement& r, const LieElement& x) { return ad_tensor(x, r); }

namespace {

/// Exact inverse of a small symmetric rational matrix.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail(Errc::Internal, "singular Cartan Gram matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational d = m[col][col];
    for (int c = 0; c < n; ++c) {
      m[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

void check_generator_coboundary(const CobracketTable& delta, const Algebra& alg,
                                const TensorElement& r,
                                const std::vector<BasisSymbol>& generators) {
  for (BasisSymbol g : generators) {
    LieElement x = alg.basis_element(g);
    if (coboundary(r, x) != delta.delta_symbol(g))
      fail(Errc::NormalizationFailure,
           "no scaling gives del r = delta on generator " + alg.symbol_name(g));
  }
}

TensorElement cartan_casimir_half(const ChevalleyAlgebra& fin, const Algebra& target,
                                  const std::function<BasisSymbol(BasisSymbol)>& embed) {
  int l = fin.rank();
  std::vector<std::vector<Rational>> gram(l, std::vector<Rational>(l, Rational(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) gram[i][j] = fin.form_basis(fin.h_symbol(i), fin.h_symbol(j));
  auto ginv = invert(std::move(gram));
  TensorElement part(target);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      part.add_term({embed(fin.h_symbol(i)), embed(fin.h_symbol(j))}, ginv[i][j] * half());
  return part;
}

TensorElement root_pairs_r(const ChevalleyAlgebra& fin, const Algebra& target,
                           const std::function<BasisSymbol(BasisSymbol)>& embed,
                           const std::function<bool(int)>& root_filter) {
  TensorElement out(target);
  for (int g = 0; g < fin.roots().count_positive(); ++g) {
    if (!root_filter(g)) continue;
    Rational pairing = fin.form_basis(fin.e_symbol(g), fin.f_symbol(g));
    if (pairing.is_zero()) fail(Errc::Internal, "degenerate e/f pairing");
    out.add_term({embed(fin.e_symbol(g)), embed(fin.f_symbol(g))}, Rational(1) / pairing);
  }
  return out;
}

} // namespace

QuasitriangularStructure canonical_r(const std::shared_ptr<const ChevalleyAlgebra>& g,
                                     const CobracketTable& delta) {
  auto embed = [](BasisSymbol s) { return s; };
  TensorElement r = root_pairs_r(*g, *g, embed, [](int) { return true; }) +
                    cartan_casimir_half(*g, *g, embed);
  std::vector<BasisSymbol> gens;
  for (BasisSymbol s : g->basis_window(0, 0))
    if (g->is_delta_generator(s)) gens.push_back(s);
  check_generator_coboundary(delta, *g, r, gens);
  return {std::move(r)};
}

QuasitriangularStructure sharp_r(const std::shared_ptr<const ChevalleyAlgebra>& ambient,
                                 const std::vector<int>& sub_simple, const CobracketTable& delta) {
  auto embed = [](BasisSymbol s) { return s; };
  auto supported = [&](int g) {
    const auto& root = ambient->roots().positive[g];
    for (int i = 0; i < ambient->rank(); ++i) {
      if (root[i] == 0) continue;
      if (std::find(sub_simple.begin(), sub_simple.end(), i) == sub_simple.end()) return false;
    }
    return true;
  };
  TensorElement r = root_pairs_r(*ambient, *ambient, embed, supported) +
                    cartan_casimir_half(*ambient, *ambient, embed);
  std::vector<BasisSymbol> gens;
  for (int i = 0; i < ambient->rank(); ++i) gens.push_back(ambient->h_symbol(i));
  for (int g = 0; g < ambient->roots().count_positive(); ++g)
    if (ambient->roots().height_of(g) == 1 && supported(g)) {
      gens.push_back(ambient->e_symbol(g));
      gens.push_back(ambient->f_symbol(g));
    }
  check_generator_coboundary(delta, *ambient, r, gens);
  return {std::move(r)};
}

QuasitriangularStructure affine_sharp_r(const std::shared_ptr<const AffineLoopAlgebra>& alg,
                                        const CobracketTable& delta) {
  const ChevalleyAlgebra& fin = alg->base();
  auto embed = [](BasisSymbol s) { return BasisSymbol::loop(0, s.index); };
  TensorElement r = root_pairs_r(fin, *alg, embed, [](int) { return true; }) +
                    cartan_casimir_half(fin, *alg, embed);
  r.add_term({BasisSymbol::central(), BasisSymbol::derivation()}, half());
  r.add_term({BasisSymbol::derivation(), BasisSymbol::central()}, half());
  std::vector<BasisSymbol> gens;
  for (BasisSymbol s : alg->basis_window(0, 0))
    if (alg->is_delta_generator(s)) gens.push_back(s);
  check_generator_coboundary(delta, *alg, r, gens);
  return {std::move(r)};
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["instance"] = instance;
  j["pairs_checked"] = pairs_checked;
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : failures)
    fs.push_back({{"check", f.check},
                  {"x", f.x},
                  {"y", f.y},
                  {"expected", f.expected},
                  {"got", f.got}});
  j["failures"] = fs;
  return j;
}

Report verify_lie_bialgebra(const CobracketTable& delta, int lo, int hi) {
  const Algebra& alg = delta.algebra();
  Report rep;
  rep.instance = "lie-bialgebra axioms on " + alg.name();
  auto symbols = alg.basis_window(lo, hi);
  auto delta_of = [&](BasisSymbol s) { return delta.delta_symbol(s); };

  for (BasisSymbol s : symbols) {
    ++rep.pairs_checked;
    TensorElement d = delta.delta_symbol(s);
    TensorElement anti = d + flip(d);
    if (!anti.is_zero())
      rep.note("anticocommutativity", alg.symbol_name(s), "", "0", render_tensor(anti));
    TensorCube cj = apply_to_slot(d, 0, delta_of);
    TensorCube total = cj + rotate(cj) + rotate(rotate(cj));
    if (!total.is_zero())
      rep.note("co-Jacobi", alg.symbol_name(s), "", "0", render_cube(total));
  }
  for (BasisSymbol s : symbols)
    for (BasisSymbol t : symbols) {
      ++rep.pairs_checked;
      LieElement x = alg.basis_element(s);
      LieElement y = alg.basis_element(t);
      TensorElement lhs = delta.delta(alg.bracket(x, y));
      TensorElement rhs = ad_tensor(x, delta.delta_symbol(t)) - ad_tensor(y, delta.delta_symbol(s));
      if (lhs != rhs) {
        rep.note("1-cocycle", alg.symbol_name(s), alg.symbol_name(t), render_tensor(lhs),
                 render_tensor(rhs));
        if (rep.failures.size() > 8) return rep;
      }
    }
  return rep;
}

Report verify_quasitriangular(const CobracketTable& delta, const TensorElement& r, int lo,
                              int hi) {
  const Algebra& alg = delta.algebra();
  Report rep;
  rep.instance = "quasitriangular structure on " + alg.name();
  TensorCube defect = cybe_defect(r);
  ++rep.pairs_checked;
  if (!defect.is_zero()) rep.note("CYBE", render_tensor(r), "", "0", render_cube(defect));

  TensorElement rp = symmetric_part(r);
  auto symbols = alg.basis_window(lo, hi);
  for (BasisSymbol s : symbols) {
    ++rep.pairs_checked;
    TensorElement moved = ad_tensor(alg.basis_element(s), rp);
    if (!moved.is_zero())
      rep.note("ad-invariance of r+", alg.symbol_name(s), "", "0", render_tensor(moved));
  }

  // (id (x) delta) r = [r_13, r_12] = sum [a,c] (x) d (x) b
  auto delta_of = [&](BasisSymbol s) { return delta.delta_symbol(s); };
  TensorCube lhs = apply_to_slot(r, 1, delta_of);
  TensorCube rhs(alg);
  for (const auto& [k1, c1] : r.terms())
    for (const auto& [k2, c2] : r.terms()) {
      const auto& [a, b] = k1;
      const auto& [c, d] = k2;
      LieElement br = alg.bracket_basis(a, c);
      for (const auto& [w, cw] : br.terms()) rhs.add_term({w, d, b}, c1 * c2 * cw);
    }
  ++rep.pairs_checked;
  if (lhs != rhs)
    rep.note("(id x delta) r = [r13, r12]", render_tensor(r), "", render_cube(rhs),
             render_cube(lhs));

  for (BasisSymbol s : symbols) {
    ++rep.pairs_checked;
    TensorElement del = coboundary(r, alg.basis_element(s));
    TensorElement dl = delta.delta_symbol(s);
    if (del != dl)
      rep.note("coboundary = delta", alg.symbol_name(s), "", render_tensor(dl),
               render_tensor(del));
  }
  return rep;
}

} // namespace kmbraid
