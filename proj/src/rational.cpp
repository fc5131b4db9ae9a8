#include "kmbraid/rational.hpp"

#include <cctype>
#include <ostream>

namespace kmbraid {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DiagonalNotTwo: return "DiagonalNotTwo";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::AsymmetricZeroPattern: return "AsymmetricZeroPattern";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::CertificateNotFound: return "CertificateNotFound";
    case Errc::NormalizationFailure: return "NormalizationFailure";
    case Errc::WindowOverflow: return "WindowOverflow";
    case Errc::PairingMismatch: return "PairingMismatch";
    case Errc::InfiniteDimensional: return "InfiniteDimensional";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::UnknownAlgebra: return "UnknownAlgebra";
    case Errc::OperandMismatch: return "OperandMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Internal: return "Internal";
  }
  return "Internal";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { fail(Errc::SyntaxError, "not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto is_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(num, true) || !is_int(den, false)) bad();
  mpq_class v{mpz_class(num), mpz_class(den)};
  if (v.get_den() == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace kmbraid
