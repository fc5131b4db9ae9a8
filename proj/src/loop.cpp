#include "kmbraid/loop.hpp"

#include "kmbraid/tensor_ops.hpp"

namespace kmbraid {

Rational residue(const std::map<int, Rational>& laurent) {
  auto it = laurent.find(-1);
  return it == laurent.end() ? Rational(0) : it->second;
}

std::map<int, Rational> t_ddt(const std::map<int, Rational>& laurent) {
  std::map<int, Rational> out;
  for (const auto& [i, c] : laurent) {
    Rational v = Rational(i) * c;
    if (!v.is_zero()) out[i] = v;
  }
  return out;
}

std::shared_ptr<const AffineLoopAlgebra> AffineLoopAlgebra::build(
    std::shared_ptr<const ChevalleyAlgebra> base, std::string name) {
  auto alg = std::shared_ptr<AffineLoopAlgebra>(new AffineLoopAlgebra());
  alg->base_ = std::move(base);
  const auto& C = alg->base_->datum().C;
  alg->affine_C_ = affinize(C);
  alg->affine_d_ = symmetrize(alg->affine_C_);
  alg->affine_k_ = root_length_weights(alg->affine_C_);
  alg->affine_datum_ = affine_realization(C);
  alg->name_ = name.empty() ? ("affine(" + alg->base_->name() + ")") : std::move(name);
  // the finite weights must be the restriction of the affine ones, or the
  // degree-0 generator cobrackets would disagree between the two views
  for (int i = 0; i < C.n; ++i) {
    if (alg->affine_d_.d[i + 1] != alg->base_->symmetrizer().d[i])
      fail(Errc::Internal, "affine symmetrizer does not restrict to the finite one");
    if (alg->affine_k_[i + 1] != alg->base_->roots().k[i])
      fail(Errc::Internal, "affine length weights do not restrict to the finite ones");
  }
  // E0 and F0 are single basis vectors with coefficient 1 by the theta
  // normalization; the Serre generators e_0, f_0 are then basis symbols.
  const LieElement& E0 = alg->base_->E0();
  const LieElement& F0 = alg->base_->F0();
  if (E0.term_count() != 1 || F0.term_count() != 1 ||
      E0.terms().begin()->second != Rational(1) || F0.terms().begin()->second != Rational(1))
    fail(Errc::Internal, "theta vectors are not unit basis vectors");
  alg->e0_finite_ = E0.terms().begin()->first.index;
  alg->f0_finite_ = F0.terms().begin()->first.index;
  return alg;
}

LieElement AffineLoopAlgebra::bracket_basis(BasisSymbol a, BasisSymbol b) const {
  LieElement out(*this);
  if (a.is_central() || b.is_central()) return out;
  if (a.is_derivation() && b.is_derivation()) return out;
  if (a.is_derivation()) {
    out.add_term(b, Rational(b.degree));
    return out;
  }
  if (b.is_derivation()) {
    out.add_term(a, Rational(-a.degree));
    return out;
  }
  // loop x loop
  BasisSymbol x = BasisSymbol::finite(a.index);
  BasisSymbol y = BasisSymbol::finite(b.index);
  int deg = a.degree + b.degree;
  LieElement fin = base_->bracket_basis(x, y);
  for (const auto& [z, c] : fin.terms()) out.add_term(BasisSymbol::loop(deg, z.index), c);
  if (deg == 0 && a.degree != 0) {
    // Res((d t^i/dt) t^j) = i when i + j = 0
    Rational central = Rational(a.degree) * base_->form_basis(x, y);
    out.add_term(BasisSymbol::central(), central);
  }
  return out;
}

Rational AffineLoopAlgebra::form_basis(BasisSymbol a, BasisSymbol b) const {
  if (a.is_loop() && b.is_loop()) {
    if (a.degree + b.degree != 0) return 0;
    return base_->form_basis(BasisSymbol::finite(a.index), BasisSymbol::finite(b.index));
  }
  if ((a.is_central() && b.is_derivation()) || (a.is_derivation() && b.is_central())) return 1;
  return 0;
}

bool AffineLoopAlgebra::has_symbol(BasisSymbol s) const {
  if (s.is_central() || s.is_derivation()) return true;
  return s.is_loop() && s.index >= 0 && s.index < base_->dimension();
}

std::string AffineLoopAlgebra::symbol_name(BasisSymbol s) const {
  if (s.is_central()) return "c";
  if (s.is_derivation()) return "d";
  std::string base_name = base_->symbol_name(BasisSymbol::finite(s.index));
  if (s.degree == 0) return base_name;
  return "t^" + std::to_string(s.degree) + "*" + base_name;
}

std::optional<BasisSymbol> AffineLoopAlgebra::symbol_named(std::string_view nm) const {
  if (nm == "c") return BasisSymbol::central();
  if (nm == "d") return BasisSymbol::derivation();
  auto fin = base_->symbol_named(nm);
  if (!fin) return std::nullopt;
  return BasisSymbol::loop(0, fin->index);
}

std::vector<BasisSymbol> AffineLoopAlgebra::basis_window(int lo, int hi) const {
  std::vector<BasisSymbol> out;
  for (int deg = lo; deg <= hi; ++deg) {
    for (int i = 0; i < base_->dimension(); ++i) out.push_back(BasisSymbol::loop(deg, i));
    if (deg == 0) {
      out.push_back(BasisSymbol::central());
      out.push_back(BasisSymbol::derivation());
    }
  }
  return out;
}

AffineLoopAlgebra::SerreTriple AffineLoopAlgebra::serre_triple(int i) const {
  SerreTriple t{zero(), zero(), zero()};
  if (i == 0) {
    t.e.add_term(BasisSymbol::loop(1, e0_finite_), 1);
    t.f.add_term(BasisSymbol::loop(-1, f0_finite_), 1);
    for (const auto& [s, c] : base_->Htheta().terms())
      t.h.add_term(BasisSymbol::loop(0, s.index), -c);
    t.h.add_term(BasisSymbol::central(), 1);
    return t;
  }
  int g = -1;
  for (int r = 0; r < base_->roots().count_positive(); ++r)
    if (base_->roots().height_of(r) == 1 && base_->roots().positive[r][i - 1] == 1) g = r;
  t.e.add_term(loop_symbol(0, base_->e_symbol(g)), 1);
  t.f.add_term(loop_symbol(0, base_->f_symbol(g)), 1);
  t.h.add_term(loop_symbol(0, base_->h_symbol(i - 1)), 1);
  return t;
}

std::optional<int> AffineLoopAlgebra::degree_of(const LieElement& x) const {
  std::optional<int> deg;
  for (const auto& [s, c] : x.terms()) {
    int d = symbol_degree(s);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? deg : std::optional<int>(0);
}

bool AffineLoopAlgebra::is_delta_generator(BasisSymbol s) const {
  if (s.is_central() || s.is_derivation()) return true;
  if (s.degree == 0) return base_->is_delta_generator(BasisSymbol::finite(s.index));
  if (s.degree == 1 && s.index == e0_finite_) return true;
  if (s.degree == -1 && s.index == f0_finite_) return true;
  return false;
}

TensorElement AffineLoopAlgebra::generator_delta(BasisSymbol s) const {
  if (!is_delta_generator(s)) fail(Errc::Internal, "not a cobracket generator");
  if (s.is_central() || s.is_derivation()) return TensorElement(*this);
  if (s.degree == 0) {
    BasisSymbol fin = BasisSymbol::finite(s.index);
    if (base_->is_h(fin)) return TensorElement(*this);
    TensorElement out(*this);
    TensorElement fd = base_->generator_delta(fin);
    for (const auto& [k, c] : fd.terms())
      out.add_term({BasisSymbol::loop(0, k.first.index), BasisSymbol::loop(0, k.second.index)}, c);
    return out;
  }
  // e_0 or f_0: delta x = (d_0/2) x ^ h_0, with the length-weight d_0
  SerreTriple t0 = serre_triple(0);
  Rational c = affine_k_[0] * half();
  return c * wedge(basis_element(s), t0.h);
}

Certificate AffineLoopAlgebra::certificate(BasisSymbol s) const {
  if (is_delta_generator(s)) fail(Errc::CertificateNotFound, "generators carry no certificate");
  if (s.degree == 0) {
    Certificate fin = base_->certificate(BasisSymbol::finite(s.index));
    Certificate out;
    for (auto& [coeff, x, y] : fin.pairs)
      out.pairs.emplace_back(coeff, BasisSymbol::loop(0, x.index), BasisSymbol::loop(0, y.index));
    return out;
  }
  std::scoped_lock lock(mu_);
  ensure_certificates(std::abs(s.degree));
  auto it = certs_.find(s);
  if (it == certs_.end())
    fail(Errc::CertificateNotFound, "no certificate for " + symbol_name(s));
  return it->second;
}

/// Greedy, deterministic certificate construction per degree level: lowest
/// rank pairs first, ties by symbol order. Level n symbols are expressed
/// through pairs of strictly lower levels (or degree 0 against the already
/// certified part of level n).
void AffineLoopAlgebra::ensure_certificates(int level) const {
  const int dim = base_->dimension();
  for (int n = built_level_ + 1; n <= level; ++n) {
    for (int sign : {+1, -1}) {
      int deg = sign * n;
      std::map<int, bool> known; // finite index -> certified at this level
      // generator seeds at level 1
      if (n == 1) known[sign > 0 ? e0_finite_ : f0_finite_] = true;

      auto try_certify = [&](int target) -> bool {
        // cross-level pairs (j, n-j), j = 1..n-1, then degree-0 against level n
        for (int j = 1; j < n; ++j) {
          for (int y = 0; y < dim; ++y)
            for (int z = 0; z < dim; ++z) {
              LieElement br =
                  base_->bracket_basis(BasisSymbol::finite(y), BasisSymbol::finite(z));
              if (br.term_count() != 1) continue;
              const auto& [w, cw] = *br.terms().begin();
              if (w.index != target) continue;
              Certificate cert;
              cert.pairs.emplace_back(Rational(1) / cw, BasisSymbol::loop(sign * j, y),
                                      BasisSymbol::loop(sign * (n - j), z));
              certs_[BasisSymbol::loop(deg, target)] = std::move(cert);
              return true;
            }
        }
        for (int y = 0; y < dim; ++y)
          for (int z = 0; z < dim; ++z) {
            if (!known.count(z) || !known[z]) continue;
            LieElement br = base_->bracket_basis(BasisSymbol::finite(y), BasisSymbol::finite(z));
            if (br.term_count() != 1) continue;
            const auto& [w, cw] = *br.terms().begin();
            if (w.index != target) continue;
            Certificate cert;
            cert.pairs.emplace_back(Rational(1) / cw, BasisSymbol::loop(0, y),
                                    BasisSymbol::loop(deg, z));
            certs_[BasisSymbol::loop(deg, target)] = std::move(cert);
            return true;
          }
        return false;
      };

      bool progress = true;
      while (progress) {
        progress = false;
        for (int target = 0; target < dim; ++target) {
          if (known.count(target) && known[target]) continue;
          if (try_certify(target)) {
            known[target] = true;
            progress = true;
          }
        }
      }
      for (int target = 0; target < dim; ++target)
        if (!known.count(target) || !known[target])
          fail(Errc::CertificateNotFound,
               "certificate search exhausted at degree " + std::to_string(deg));
    }
    built_level_ = n;
  }
}

} // namespace kmbraid
