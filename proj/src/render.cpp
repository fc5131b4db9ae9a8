#include "kmbraid/render.hpp"

#include <sstream>

namespace kmbraid {

namespace {

// sign-folded "c0*body0 +- c1*body1 ..." with unit coefficients dropped
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, body] : terms) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag.str() << "*";
    os << body;
  }
  return os.str();
}

std::string sym(const Algebra& alg, BasisSymbol s, const RenderOptions& opt) {
  std::string n = alg.symbol_name(s);
  if (opt.unicode && s.is_loop() && s.degree != 0) {
    // t^i*X reads t^i(x)X in pretty output
    auto star = n.find('*');
    if (star != std::string::npos) n = n.substr(0, star) + "\u2297" + n.substr(star + 1);
  }
  return n;
}

} // namespace

std::string render_element(const LieElement& x, const RenderOptions& opt) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [s, c] : x.terms()) terms.emplace_back(c, sym(x.algebra(), s, opt));
  return join_terms(terms);
}

std::string render_tensor(const TensorElement& t, const RenderOptions& opt) {
  const char* otimes = opt.unicode ? "\u2297" : "(x)";
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [k, c] : t.terms())
    terms.emplace_back(c, sym(t.algebra(), k.first, opt) + otimes + sym(t.algebra(), k.second, opt));
  return join_terms(terms);
}

std::string render_tensor_wedge(const TensorElement& t, const RenderOptions& opt) {
  if (t.is_zero()) return "0";
  const char* wedge_op = opt.unicode ? " \u2227 " : " ^ ";
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [k, c] : t.terms()) {
    const auto& [a, b] = k;
    if (b < a) continue; // partner of an earlier pair
    if (a == b || t.coeff({b, a}) != -c) return render_tensor(t, opt);
    terms.emplace_back(c, "(" + sym(t.algebra(), a, opt) + wedge_op + sym(t.algebra(), b, opt) + ")");
  }
  return join_terms(terms);
}

std::string render_cube(const TensorCube& t, const RenderOptions& opt) {
  const char* otimes = opt.unicode ? "\u2297" : "(x)";
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [k, c] : t.terms())
    terms.emplace_back(c, sym(t.algebra(), k[0], opt) + otimes + sym(t.algebra(), k[1], opt) +
                              otimes + sym(t.algebra(), k[2], opt));
  return join_terms(terms);
}

namespace {

std::string latex_sym(const Algebra& alg, BasisSymbol s) {
  std::string n = alg.symbol_name(s);
  auto subscript = [](const std::string& nm) { return nm.substr(0, 1) + "_{" + nm.substr(1) + "}"; };
  if (s.is_loop() && s.degree != 0) {
    auto star = n.find('*');
    std::string head = n.substr(0, star), tail = n.substr(star + 1);
    n = "t^{" + head.substr(2) + "}\\otimes " + subscript(tail);
  } else if (s.is_loop() || s.kind == BasisSymbol::Kind::Finite) {
    n = subscript(n); // E12 -> E_{12}
  }
  return n;
}

std::string latex_join(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, body] : terms) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) {
      if (mag.denominator_str() != "1")
        os << "\\tfrac{" << mag.numerator_str() << "}{" << mag.denominator_str() << "}";
      else
        os << mag.str();
    }
    os << body;
  }
  return os.str();
}

} // namespace

std::string latex_element(const LieElement& x) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [s, c] : x.terms()) terms.emplace_back(c, latex_sym(x.algebra(), s));
  return latex_join(terms);
}

std::string latex_tensor_wedge(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [k, c] : t.terms()) {
    const auto& [a, b] = k;
    if (b < a) continue;
    if (a == b || t.coeff({b, a}) != -c) { // not antisymmetric: plain tensors
      terms.clear();
      for (const auto& [k2, c2] : t.terms())
        terms.emplace_back(c2, latex_sym(t.algebra(), k2.first) + "\\otimes " +
                                   latex_sym(t.algebra(), k2.second));
      return latex_join(terms);
    }
    terms.emplace_back(c, "(" + latex_sym(t.algebra(), a) + ")\\wedge(" +
                              latex_sym(t.algebra(), b) + ")");
  }
  return latex_join(terms);
}

nlohmann::json gcm_to_json(const GeneralizedCartanMatrix& C, const Symmetrizer& d) {
  nlohmann::json j;
  j["n"] = C.n;
  j["entries"] = C.entries;
  nlohmann::json sym = nlohmann::json::array();
  for (const auto& v : d.d)
    sym.push_back({std::stol(v.numerator_str()), std::stol(v.denominator_str())});
  j["symmetrizer"] = sym;
  j["labels"] = C.labels;
  return j;
}

nlohmann::json structure_to_json(const ChevalleyAlgebra& alg) {
  nlohmann::json j;
  nlohmann::json basis = nlohmann::json::array();
  int dim = alg.dimension();
  for (int i = 0; i < dim; ++i) basis.push_back(alg.symbol_name(BasisSymbol::finite(i)));
  j["basis"] = basis;
  nlohmann::json bracket = nlohmann::json::array();
  for (int i = 0; i < dim; ++i)
    for (int jj = 0; jj < dim; ++jj) {
      LieElement v = alg.bracket_basis(BasisSymbol::finite(i), BasisSymbol::finite(jj));
      if (v.is_zero()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [s, c] : v.terms())
        terms.push_back({s.index, std::stol(c.numerator_str()), std::stol(c.denominator_str())});
      bracket.push_back({i, jj, terms});
    }
  j["bracket"] = bracket;
  nlohmann::json form = nlohmann::json::array();
  for (int i = 0; i < dim; ++i)
    for (int jj = i; jj < dim; ++jj) {
      Rational v = alg.form_basis(BasisSymbol::finite(i), BasisSymbol::finite(jj));
      if (v.is_zero()) continue;
      form.push_back({i, jj, std::stol(v.numerator_str()), std::stol(v.denominator_str())});
    }
  j["form"] = form;
  return j;
}

std::string latex_structure_table(const ChevalleyAlgebra& alg) {
  std::ostringstream os;
  int dim = alg.dimension();
  os << "\\begin{array}{ll}\n";
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      LieElement v = alg.bracket_basis(BasisSymbol::finite(i), BasisSymbol::finite(j));
      if (v.is_zero()) continue;
      os << "[" << latex_sym(alg, BasisSymbol::finite(i)) << ","
         << latex_sym(alg, BasisSymbol::finite(j)) << "] &= " << latex_element(v) << " \\\\\n";
    }
  os << "\\end{array}\n";
  return os.str();
}

nlohmann::json delta_row_json(const Algebra& alg, const LieElement& element,
                              const TensorElement& delta) {
  nlohmann::json row;
  row["element"] = render_element(element);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : delta.terms())
    terms.push_back({c.str(), alg.symbol_name(k.first), alg.symbol_name(k.second)});
  row["delta"] = terms;
  return row;
}

} // namespace kmbraid
