#ifndef KMBRAID_SYMBOL_HPP
#define KMBRAID_SYMBOL_HPP

#include <cstdint>
#include <tuple>

namespace kmbraid {

/// Opaque basis symbol issued by an algebra. Finite algebras use plain
/// indices; affine loop algebras use (degree, finite index) pairs plus the
/// central symbol c and the derivation symbol d.
///
/// The total order is fixed once per algebra and never changes: loop symbols
/// sort by (degree, finite index), with c and d placed at the end of the
/// degree-0 block. Canonical printing and the tensor normal form depend on it.
struct BasisSymbol {
  enum class Kind : std::uint8_t { Finite = 0, Loop = 1, Central = 2, Derivation = 3 };

  Kind kind = Kind::Finite;
  int degree = 0; // loop degree; 0 for finite/c/d
  int index = 0;  // finite basis index; 0 for c/d

  static BasisSymbol finite(int idx) { return {Kind::Finite, 0, idx}; }
  static BasisSymbol loop(int deg, int idx) { return {Kind::Loop, deg, idx}; }
  static BasisSymbol central() { return {Kind::Central, 0, 0}; }
  static BasisSymbol derivation() { return {Kind::Derivation, 0, 0}; }

  bool is_loop() const { return kind == Kind::Loop; }
  bool is_central() const { return kind == Kind::Central; }
  bool is_derivation() const { return kind == Kind::Derivation; }

  // c and d tier after the loop symbols of their degree.
  int tier() const {
    switch (kind) {
      case Kind::Central: return 1;
      case Kind::Derivation: return 2;
      default: return 0;
    }
  }

  friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) {
    return a.kind == b.kind && a.degree == b.degree && a.index == b.index;
  }
  friend bool operator!=(const BasisSymbol& a, const BasisSymbol& b) { return !(a == b); }
  friend bool operator<(const BasisSymbol& a, const BasisSymbol& b) {
    return std::tuple(a.degree, a.tier(), a.index) < std::tuple(b.degree, b.tier(), b.index);
  }
  friend bool operator<=(const BasisSymbol& a, const BasisSymbol& b) { return a < b || a == b; }
  friend bool operator>(const BasisSymbol& a, const BasisSymbol& b) { return b < a; }
};

} // namespace kmbraid

#endif
