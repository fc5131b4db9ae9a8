#include "kmbraid/parse.hpp"

#include <cctype>

#include "kmbraid/loop.hpp"

namespace kmbraid {

namespace {

struct Cursor {
  std::string_view src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(Errc::SyntaxError, what + " at position " + std::to_string(pos));
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == digits) error("expected an integer");
    return std::stol(std::string(src.substr(start, pos - start)));
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])))) ++pos;
    if (pos == start) error("expected a symbol name");
    return std::string(src.substr(start, pos - start));
  }

  bool peek_digit() {
    skip_ws();
    if (pos >= src.size()) return false;
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if ((c == '-' || c == '+') && pos + 1 < src.size() &&
        std::isdigit(static_cast<unsigned char>(src[pos + 1])))
      return true;
    return false;
  }
};

BasisSymbol resolve(Cursor& cur, const Algebra& alg, const std::string& name, int t_power) {
  if (t_power == 0) {
    auto s = alg.symbol_named(name);
    if (!s) fail(Errc::UnknownSymbol, "unknown symbol '" + name + "'");
    return *s;
  }
  const auto* affine = dynamic_cast<const AffineLoopAlgebra*>(&alg);
  if (!affine)
    fail(Errc::UnknownSymbol, "loop symbol 't^" + std::to_string(t_power) + "*" + name +
                                  "' in a finite algebra");
  auto fin = affine->base().symbol_named(name);
  if (!fin) fail(Errc::UnknownSymbol, "unknown symbol '" + name + "'");
  (void)cur;
  return BasisSymbol::loop(t_power, fin->index);
}

// atom := 't^' int '*' SYM | SYM | 'c' | 'd'
BasisSymbol atom(Cursor& cur, const Algebra& alg) {
  std::string name = cur.ident();
  if (name == "t") {
    if (!cur.eat('^')) cur.error("expected '^' after t");
    long power = cur.integer();
    if (!cur.eat('*')) cur.error("expected '*' after t-power");
    std::string sym = cur.ident();
    if (sym == "c" || sym == "d" || sym == "t") cur.error("'" + sym + "' cannot carry a t-power");
    return resolve(cur, alg, sym, static_cast<int>(power));
  }
  return resolve(cur, alg, name, 0);
}

} // namespace

LieElement parse_element(std::string_view src, const Algebra& alg) {
  Cursor cur{src};
  LieElement out(alg);
  if (cur.done()) cur.error("empty expression");
  // special-case the zero element
  {
    Cursor probe = cur;
    if (probe.peek_digit()) {
      long v = probe.integer();
      if (v == 0 && probe.done()) return out;
    }
  }
  bool first = true;
  while (!cur.done()) {
    Rational sign = 1;
    if (cur.eat('+')) {
      if (first) cur.error("unexpected '+'");
    } else if (cur.eat('-')) {
      sign = -1;
    } else if (!first) {
      cur.error("expected '+' or '-'");
    }
    Rational coeff = sign;
    if (cur.peek_digit()) {
      long num = cur.integer();
      Rational value(num);
      if (cur.eat('/')) {
        long den = cur.integer();
        if (den <= 0) cur.error("denominator must be positive");
        value = Rational(num, den);
      }
      coeff = sign * value;
      if (!cur.eat('*')) cur.error("expected '*' after coefficient");
    }
    out.add_term(atom(cur, alg), coeff);
    first = false;
  }
  return out;
}

} // namespace kmbraid
