#ifndef KMBRAID_ERRORS_HPP
#define KMBRAID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kmbraid {

/// Engine error codes. Tests match on these rather than on message text.
enum class Errc {
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZeroPattern,
  NotSymmetrizable,
  NotFiniteType,
  NotIrreducible,
  RankTooLarge,
  CertificateNotFound,
  NormalizationFailure,
  WindowOverflow,
  PairingMismatch,
  InfiniteDimensional,
  SyntaxError,
  UnknownSymbol,
  UnknownAlgebra,
  OperandMismatch,
  DivisionByZero,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace kmbraid

#endif
