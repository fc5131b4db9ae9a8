#ifndef KMBRAID_ALGEBRA_HPP
#define KMBRAID_ALGEBRA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "kmbraid/element.hpp"

namespace kmbraid {

/// Witness that a basis symbol b equals sum_k lambda_k [x_k, y_k] with x_k,
/// y_k of strictly smaller recursion rank (generators have rank 0). Replaying
/// a certificate through the bracket reproduces b exactly; the cobracket
/// engine walks certificates to apply the cocycle condition.
struct Certificate {
  std::vector<std::tuple<Rational, BasisSymbol, BasisSymbol>> pairs;
};

/// Common surface of the concrete algebras (finite Chevalley, affine loop).
/// Implementations are immutable after construction and freely shareable
/// between threads; all operations here are pure.
class Algebra {
public:
  virtual ~Algebra() = default;

  virtual std::string name() const = 0;

  virtual LieElement bracket_basis(BasisSymbol a, BasisSymbol b) const = 0;

  /// Normalized invariant bilinear form on basis symbols.
  virtual Rational form_basis(BasisSymbol a, BasisSymbol b) const = 0;

  virtual bool has_symbol(BasisSymbol s) const = 0;
  virtual std::string symbol_name(BasisSymbol s) const = 0;
  virtual std::optional<BasisSymbol> symbol_named(std::string_view name) const = 0;

  /// Basis symbols with loop degree in [lo, hi] (plus c, d for affine
  /// algebras), in canonical order. Finite algebras ignore the window.
  virtual std::vector<BasisSymbol> basis_window(int lo, int hi) const = 0;

  /// Cobracket seed data: generators carry an explicit delta value, every
  /// other basis symbol carries a replayable bracket certificate.
  virtual bool is_delta_generator(BasisSymbol s) const = 0;
  virtual TensorElement generator_delta(BasisSymbol s) const = 0;
  virtual Certificate certificate(BasisSymbol s) const = 0;

  LieElement zero() const { return LieElement(*this); }

  LieElement basis_element(BasisSymbol s) const {
    LieElement e(*this);
    e.add_term(s, 1);
    return e;
  }

  /// Bilinear extension of bracket_basis.
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  /// Bilinear extension of form_basis.
  Rational form(const LieElement& x, const LieElement& y) const;
};

} // namespace kmbraid

#endif
