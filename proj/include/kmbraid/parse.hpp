#ifndef KMBRAID_PARSE_HPP
#define KMBRAID_PARSE_HPP

#include <string_view>

#include "kmbraid/algebra.hpp"

namespace kmbraid {

/// Parses the ASCII element grammar against an algebra's symbol table:
///
///   expr     := term (('+'|'-') term)*
///   term     := [rational '*'] atom
///   atom     := 't^' int '*' SYM | SYM | 'c' | 'd'
///   rational := int ['/' posint]
///
/// "t^0*H1" is the same element as "H1"; like terms merge. A bare "0" parses
/// as the zero element. SyntaxError carries the character position,
/// UnknownSymbol the offending name.
LieElement parse_element(std::string_view src, const Algebra& alg);

} // namespace kmbraid

#endif
