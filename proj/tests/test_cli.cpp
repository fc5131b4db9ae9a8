#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "kmbraid/cli.hpp"

using namespace kmbraid;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cartan and affinize emit the matrix schema") {
  Run r = cli({"cartan", "A2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["entries"] == nlohmann::json({{2, -1}, {-1, 2}}));
  CHECK(j["symmetrizer"] == nlohmann::json({{1, 1}, {1, 1}}));

  Run a = cli({"affinize", "A2"});
  REQUIRE(a.code == 0);
  auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["entries"] == nlohmann::json({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  CHECK(ja["labels"] == nlohmann::json({"0", "1", "2"}));
}

TEST_CASE("algebra build prints a summary and dumps") {
  Run r = cli({"algebra", "build", "A2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension 8") != std::string::npos);
  Run j = cli({"algebra", "build", "A1", "--json"});
  CHECK(j.code == 0);
  auto dump = nlohmann::json::parse(j.out);
  CHECK(dump["basis"] == nlohmann::json({"E1", "H1", "F1"}));
  CHECK(!dump["bracket"].empty());
  CHECK(!dump["form"].empty());
}

TEST_CASE("cobracket and braided print wedge forms") {
  Run r = cli({"cobracket", "A1", "E1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/2*(E1 ^ H1)\n");
  Run b = cli({"braided", "affine:A2", "t^2*E1"});
  CHECK(b.code == 0);
  CHECK(b.out == "(t^1*E1 ^ t^1*H1) - (t^1*E12 ^ t^1*F2)\n");
  Run z = cli({"braided", "affine:A2", "t^1*E1"});
  CHECK(z.out == "0\n");
  // unicode pretty form behind the flag
  Run u = cli({"braided", "affine:A2", "t^2*E1", "--unicode"});
  CHECK(u.out.find("∧") != std::string::npos);
  CHECK(u.out.find("⊗") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
  Run a = cli({"table", "affine:A2", "--max-degree", "3", "--format", "json"});
  Run b = cli({"table", "affine:A2", "--max-degree", "3", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify suites exit 0 on pass") {
  CHECK(cli({"verify", "bialgebra", "A2", "--window", "0..0"}).code == 0);
  CHECK(cli({"verify", "bialgebra", "affine:A1", "--window", "-2..2"}).code == 0);
  CHECK(cli({"verify", "quasitriangular", "A2"}).code == 0);
  CHECK(cli({"verify", "braided", "affine:A1", "--window", "1..2"}).code == 0);
}

TEST_CASE("dbos subcommands") {
  Run fin = cli({"dbos", "A2", "--delete", "2"});
  CHECK(fin.code == 0);
  CHECK(fin.out.find("pass") != std::string::npos);
  Run aff = cli({"dbos", "affine:A1", "--affinization", "--window", "-2..2"});
  CHECK(aff.code == 0);
}

TEST_CASE("golden compare against the shipped files") {
  setenv("KMBRAID_GOLDEN_DIR", GOLDEN_DIR, 1);
  CHECK(cli({"golden", "compare", "a2_delta.json"}).code == 0);
  CHECK(cli({"golden", "compare", "a2_braided_delta.json"}).code == 0);
  Run missing = cli({"golden", "compare", "nope.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"cobracket", "A1", "E1 +"}).code == 2);
  CHECK(cli({"cobracket", "A1", "E9"}).code == 2);
  CHECK(cli({"cobracket", "Z9", "E1"}).code == 2);
  CHECK(cli({"verify", "bialgebra", "A2", "--window", "junk"}).code == 2);
  CHECK(cli({"braided", "A2", "E1"}).code == 2);
}

TEST_CASE("every spec example is runnable") {
  CHECK(cli({"cobracket", "affine:A2", "t^1*E1"}).code == 0);
  CHECK(cli({"cobracket", "affine:A2", "1/2*t^2*E12 - c"}).code == 0);
  CHECK(cli({"braided", "affine:A2", "t^2*E1"}).code == 0);
  CHECK(cli({"verify", "bialgebra", "affine:A2", "--window", "-3..3"}).code == 0);
  CHECK(cli({"table", "affine:A2", "--max-degree", "4", "--format", "json"}).code == 0);
  CHECK(cli({"dbos", "affine:A2", "--affinization", "--window", "-2..2"}).code == 0);
}
