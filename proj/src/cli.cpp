#include "kmbraid/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kmbraid/dbos.hpp"
#include "kmbraid/factory.hpp"
#include "kmbraid/parse.hpp"
#include "kmbraid/render.hpp"

namespace kmbraid {

namespace {

struct Usage {
  std::string what;
};

std::pair<int, int> parse_window(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw Usage{"window must look like lo..hi"};
  try {
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw Usage{"window with lo > hi"};
    return {lo, hi};
  } catch (const Usage&) {
    throw;
  } catch (...) {
    throw Usage{"window must look like lo..hi"};
  }
}

std::shared_ptr<const CobracketTable> table_for(const std::shared_ptr<const Algebra>& alg) {
  return std::make_shared<const CobracketTable>(alg);
}

nlohmann::json build_delta_table(const std::string& spec, const std::string& kind,
                                 int max_degree) {
  constexpr std::string_view prefix = "affine:";
  if (spec.substr(0, prefix.size()) != prefix)
    throw Usage{"tables are emitted for affine algebras, e.g. affine:A2"};
  auto alg = make_affine(spec.substr(prefix.size()));
  auto delta = table_for(alg);
  nlohmann::json j;
  j["algebra"] = spec;
  j["kind"] = kind;
  j["max_degree"] = max_degree;
  nlohmann::json rows = nlohmann::json::array();
  std::optional<BraidedLieBialgebra> braided;
  if (kind == "braided_delta") braided.emplace(current_algebra_view(alg, delta));
  for (int deg = 1; deg <= max_degree; ++deg)
    for (int idx = 0; idx < alg->base().dimension(); ++idx) {
      LieElement el = alg->basis_element(BasisSymbol::loop(deg, idx));
      TensorElement value =
          braided ? braided->braided_delta(el) : delta->delta(el);
      rows.push_back(delta_row_json(*alg, el, value));
    }
  j["rows"] = rows;
  return j;
}

std::string table_to_text(const nlohmann::json& j, const std::string& spec,
                          const std::string& kind, bool unicode, bool latex) {
  auto alg = make_affine(spec.substr(std::string("affine:").size()));
  auto delta = table_for(alg);
  std::optional<BraidedLieBialgebra> braided;
  if (kind == "braided_delta") braided.emplace(current_algebra_view(alg, delta));
  std::ostringstream os;
  const char* head = kind == "braided_delta" ? "braided_delta" : "delta";
  for (const auto& row : j["rows"]) {
    LieElement el = parse_element(row["element"].get<std::string>(), *alg);
    TensorElement value = braided ? braided->braided_delta(el) : delta->delta(el);
    if (latex) {
      os << (kind == "braided_delta" ? "\\underline{\\delta}" : "\\delta") << "("
         << latex_element(el) << ") &= " << latex_tensor_wedge(value) << " \\\\\n";
    } else {
      os << head << "(" << render_element(el) << ") = "
         << render_tensor_wedge(value, {unicode}) << "\n";
    }
  }
  return os.str();
}

nlohmann::json normalize_rows(const nlohmann::json& rows) {
  // order-independent comparison: element -> sorted term list
  nlohmann::json out = nlohmann::json::object();
  for (const auto& row : rows) {
    std::vector<std::string> terms;
    for (const auto& t : row["delta"])
      terms.push_back(t[0].get<std::string>() + "|" + t[1].get<std::string>() + "|" +
                      t[2].get<std::string>());
    std::sort(terms.begin(), terms.end());
    out[row["element"].get<std::string>()] = terms;
  }
  return out;
}

int report_exit(const Report& rep, std::ostream& out, std::ostream& err) {
  out << rep.to_json()["instance"].get<std::string>() << ": "
      << (rep.passed() ? "pass" : "FAIL") << " (" << rep.pairs_checked << " checks)\n";
  if (!rep.passed()) {
    err << rep.to_json().dump(2) << "\n";
    return 1;
  }
  return 0;
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const Usage& u) {
    err << "usage error: " << u.what << "\n";
    return 2;
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::SyntaxError:
      case Errc::UnknownSymbol:
      case Errc::UnknownAlgebra:
        err << e.what() << "\n";
        return 2;
      default:
        err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
  } catch (const std::exception& e) {
    err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}

namespace {

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Kac-Moody bialgebra and braided cobracket engine"};
  app.require_subcommand(1);

  std::string type_arg, spec_arg, expr_arg, window_arg = "-3..3", format = "text";
  std::string kind = "delta", out_file, suite, golden_file, delete_node;
  int max_degree = 4;
  bool unicode = false, as_json = false, as_latex = false, affinization = false;

  auto* cartan = app.add_subcommand("cartan", "validated Cartan matrix with symmetrizer");
  cartan->add_option("type", type_arg)->required();

  auto* affz = app.add_subcommand("affinize", "untwisted affine matrix of a finite type");
  affz->add_option("type", type_arg)->required();

  auto* algebra = app.add_subcommand("algebra", "algebra constructions");
  auto* build = algebra->add_subcommand("build", "build and summarize an algebra");
  build->add_option("spec", spec_arg)->required();
  build->add_flag("--json", as_json, "structure-constant dump");
  build->add_flag("--latex", as_latex, "LaTeX bracket table");

  auto* cob = app.add_subcommand("cobracket", "cobracket of an element expression");
  cob->add_option("spec", spec_arg)->required();
  cob->add_option("expr", expr_arg)->required();
  cob->add_flag("--unicode", unicode);
  cob->add_flag("--latex", as_latex);

  auto* bra = app.add_subcommand("braided", "braided cobracket of an element expression");
  bra->add_option("spec", spec_arg)->required();
  bra->add_option("expr", expr_arg)->required();
  bra->add_flag("--unicode", unicode);
  bra->add_flag("--latex", as_latex);

  auto* tab = app.add_subcommand("table", "cobracket tables up to a degree");
  tab->add_option("spec", spec_arg)->required();
  tab->add_option("--max-degree", max_degree)->required();
  tab->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));
  tab->add_option("--kind", kind)->check(CLI::IsMember({"delta", "braided_delta"}));
  tab->add_option("--out", out_file);
  tab->add_flag("--unicode", unicode);

  auto* ver = app.add_subcommand("verify", "verification suites");
  ver->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"bialgebra", "quasitriangular", "braided"}));
  ver->add_option("spec", spec_arg)->required();
  ver->add_option("--window", window_arg);

  auto* db = app.add_subcommand("dbos", "double-bosonisation reconstruction checks");
  db->add_option("spec", spec_arg)->required();
  db->add_option("--delete", delete_node);
  db->add_flag("--affinization", affinization);
  db->add_option("--window", window_arg);

  auto* gold = app.add_subcommand("golden", "golden-file operations");
  auto* gold_cmp = gold->add_subcommand("compare", "compare a golden table against the engine");
  gold_cmp->add_option("file", golden_file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (cartan->parsed()) {
    auto C = named_gcm(type_arg);
    out << gcm_to_json(C, symmetrize(C)).dump(2) << "\n";
    return 0;
  }

  if (affz->parsed()) {
    auto C = affinize(named_gcm(type_arg));
    out << gcm_to_json(C, symmetrize(C)).dump(2) << "\n";
    return 0;
  }

  if (build->parsed()) {
    auto alg = make_algebra(spec_arg);
    if (const auto* fin = dynamic_cast<const ChevalleyAlgebra*>(alg.get())) {
      if (as_json) {
        out << structure_to_json(*fin).dump(2) << "\n";
      } else if (as_latex) {
        out << latex_structure_table(*fin);
      } else {
        out << fin->name() << ": dimension " << fin->dimension() << ", "
            << fin->roots().count_positive() << " positive roots, basis";
        for (BasisSymbol s : fin->basis_window(0, 0)) out << " " << fin->symbol_name(s);
        out << "\n";
      }
      return 0;
    }
    const auto* aff = dynamic_cast<const AffineLoopAlgebra*>(alg.get());
    out << aff->name() << ": loop realization over " << aff->base().name()
        << ", degree-0 block dimension " << aff->base().dimension() + 2 << "\n";
    out << "affine matrix: " << nlohmann::json(aff->affine_matrix().entries).dump() << "\n";
    return 0;
  }

  if (cob->parsed() || bra->parsed()) {
    auto alg = make_algebra(spec_arg);
    LieElement el = parse_element(expr_arg, *alg);
    auto delta = table_for(alg);
    TensorElement value(*alg);
    if (bra->parsed()) {
      auto aff = std::dynamic_pointer_cast<const AffineLoopAlgebra>(alg);
      if (!aff) throw Usage{"braided cobrackets need an affine:<type> algebra"};
      value = current_algebra_view(aff, delta).braided_delta(el);
    } else {
      value = delta->delta(el);
    }
    if (as_latex)
      out << latex_tensor_wedge(value) << "\n";
    else
      out << render_tensor_wedge(value, {unicode}) << "\n";
    return 0;
  }

  if (tab->parsed()) {
    nlohmann::json j = build_delta_table(spec_arg, kind, max_degree);
    std::string text;
    if (format == "json")
      text = j.dump(2) + "\n";
    else
      text = table_to_text(j, spec_arg, kind, unicode, format == "latex");
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      f << text;
    } else {
      out << text;
    }
    return 0;
  }

  if (ver->parsed()) {
    auto [lo, hi] = parse_window(window_arg);
    auto alg = make_algebra(spec_arg);
    auto delta = table_for(alg);
    if (suite == "bialgebra") return report_exit(verify_lie_bialgebra(*delta, lo, hi), out, err);
    if (suite == "quasitriangular") {
      auto fin = std::dynamic_pointer_cast<const ChevalleyAlgebra>(alg);
      if (!fin) throw Usage{"the quasitriangular suite runs on finite algebras"};
      return report_exit(verify_quasitriangular(*delta, canonical_r(fin, *delta).r), out, err);
    }
    auto aff = std::dynamic_pointer_cast<const AffineLoopAlgebra>(alg);
    if (!aff) throw Usage{"the braided suite runs on affine:<type> algebras"};
    return report_exit(current_algebra_view(aff, delta).verify(std::max(lo, 1), hi), out, err);
  }

  if (db->parsed()) {
    auto [lo, hi] = parse_window(window_arg);
    if (affinization) {
      auto aff = std::dynamic_pointer_cast<const AffineLoopAlgebra>(make_algebra(spec_arg));
      if (!aff) throw Usage{"--affinization needs an affine:<type> algebra"};
      auto delta = table_for(aff);
      int w = std::max(std::abs(lo), std::abs(hi));
      DoubleBosonisation dbos = make_affinization_dbos(aff, delta, w);
      Report brackets = dbos.compare_brackets(aff->basis_window(lo, hi));
      Report pairing = dbos.verify_pairing();
      GradedProjection grading{aff, [aff](BasisSymbol s) { return aff->symbol_degree(s); }};
      Report boson = compare_bosonisation(grading, *delta, aff->basis_window(-w - 1, 0));
      int rc = report_exit(brackets, out, err);
      rc = std::max(rc, report_exit(pairing, out, err));
      rc = std::max(rc, report_exit(boson, out, err));
      return rc;
    }
    if (delete_node.empty()) throw Usage{"dbos needs --delete <node> or --affinization"};
    auto fin = std::dynamic_pointer_cast<const ChevalleyAlgebra>(make_algebra(spec_arg));
    if (!fin) throw Usage{"--delete runs on finite algebras"};
    int node = -1;
    for (int i = 0; i < fin->datum().C.n; ++i)
      if (fin->datum().C.labels[i] == delete_node) node = i;
    if (node < 0) throw Usage{"unknown node label '" + delete_node + "'"};
    auto delta = table_for(fin);
    DoubleBosonisation dbos = make_node_deletion_dbos(fin, {node}, delta);
    auto symbols = fin->basis_window(0, 0);
    int rc = report_exit(dbos.compare_brackets(symbols), out, err);
    rc = std::max(rc, report_exit(dbos.compare_cobrackets(symbols), out, err));
    rc = std::max(rc, report_exit(dbos.verify_pairing(), out, err));
    rc = std::max(rc, report_exit(verify_quasitriangular(*delta, dbos.r_new()), out, err));
    return rc;
  }

  if (gold_cmp->parsed()) {
    std::string path = golden_file;
    std::ifstream f(path);
    if (!f) {
      const char* dir = std::getenv("KMBRAID_GOLDEN_DIR");
      std::string root = dir ? dir : "golden";
      path = root + "/" + golden_file;
      f.open(path);
    }
    if (!f) throw Usage{"golden file not found: " + golden_file};
    nlohmann::json want = nlohmann::json::parse(f);
    nlohmann::json got = build_delta_table(want["algebra"].get<std::string>(),
                                           want["kind"].get<std::string>(),
                                           want["max_degree"].get<int>());
    nlohmann::json nw = normalize_rows(want["rows"]);
    nlohmann::json ng = normalize_rows(got["rows"]);
    if (nw != ng) {
      nlohmann::json diff = nlohmann::json::array();
      for (auto it = nw.begin(); it != nw.end(); ++it) {
        if (!ng.contains(it.key()) || ng[it.key()] != it.value())
          diff.push_back({{"element", it.key()},
                          {"expected", it.value()},
                          {"got", ng.contains(it.key()) ? ng[it.key()] : nlohmann::json()}});
      }
      err << nlohmann::json{{"golden", path}, {"mismatches", diff}}.dump(2) << "\n";
      out << "golden compare " << golden_file << ": FAIL\n";
      return 1;
    }
    out << "golden compare " << golden_file << ": pass (" << want["rows"].size() << " rows)\n";
    return 0;
  }

  throw Usage{"no subcommand"};
}

} // namespace

} // namespace kmbraid
