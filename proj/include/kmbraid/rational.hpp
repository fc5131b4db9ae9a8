#ifndef KMBRAID_RATIONAL_HPP
#define KMBRAID_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "kmbraid/errors.hpp"

namespace kmbraid {

/// Exact rational scalar backed by GMP. Stored in lowest terms with a
/// positive denominator; every operation is exact. There is no floating
/// point anywhere in the engine.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {} // NOLINT: implicit by design, scalars read as literals
  Rational(long num, long den);

  /// Parses "p" or "p/q" (q > 0 after canonicalization). Round-trips with str().
  static Rational parse(std::string_view text);

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  /// Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational half() { return Rational(1, 2); }

} // namespace kmbraid

#endif
