#ifndef KMBRAID_ELEMENT_HPP
#define KMBRAID_ELEMENT_HPP

#include <array>
#include <map>
#include <utility>

#include "kmbraid/errors.hpp"
#include "kmbraid/rational.hpp"
#include "kmbraid/symbol.hpp"

namespace kmbraid {

class Algebra;

/// Sparse linear combination over an algebra's basis, keyed by Key.
/// No explicit zero coefficients are stored; equality is coefficient-wise.
/// Values are immutable in spirit: all mutating entry points canonicalize,
/// and operations are pure. Elements remember which algebra issued their
/// symbols so that mixed-algebra operands are rejected.
template <class Key>
class SparseCombination {
public:
  using Terms = std::map<Key, Rational>;

  SparseCombination() : alg_(nullptr) {}
  explicit SparseCombination(const Algebra& alg) : alg_(&alg) {}

  const Algebra& algebra() const {
    if (!alg_) fail(Errc::Internal, "element with no algebra");
    return *alg_;
  }
  const Algebra* algebra_ptr() const { return alg_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SparseCombination& add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  SparseCombination& operator+=(const SparseCombination& o) {
    merge_tag(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparseCombination& operator-=(const SparseCombination& o) {
    merge_tag(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SparseCombination& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend SparseCombination operator+(SparseCombination a, const SparseCombination& b) { return a += b; }
  friend SparseCombination operator-(SparseCombination a, const SparseCombination& b) { return a -= b; }
  friend SparseCombination operator*(const Rational& s, SparseCombination a) { return a *= s; }
  friend SparseCombination operator-(SparseCombination a) { return a *= Rational(-1); }

  friend bool operator==(const SparseCombination& a, const SparseCombination& b) {
    if (a.alg_ && b.alg_ && a.alg_ != b.alg_) return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparseCombination& a, const SparseCombination& b) { return !(a == b); }

private:
  void merge_tag(const SparseCombination& o) {
    if (!alg_) {
      alg_ = o.alg_;
      return;
    }
    if (o.alg_ && o.alg_ != alg_) fail(Errc::OperandMismatch, "operands from different algebras");
  }

  const Algebra* alg_;
  Terms terms_;
};

using SymbolPair = std::pair<BasisSymbol, BasisSymbol>;
using SymbolTriple = std::array<BasisSymbol, 3>;

/// Element of the algebra itself.
using LieElement = SparseCombination<BasisSymbol>;
/// Element of g (x) g.
using TensorElement = SparseCombination<SymbolPair>;
/// Element of g (x) g (x) g; used for the Schouten bracket and co-Jacobi.
using TensorCube = SparseCombination<SymbolTriple>;

} // namespace kmbraid

#endif
