#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "isolab/axioms.hpp"
#include "isolab/cli.hpp"
#include "isolab/fixtures.hpp"
#include "isolab/relational.hpp"
#include "isolab/report_json.hpp"
#include "isolab/structure_io.hpp"
#include "isolab/table_io.hpp"

using namespace isolab;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = ISOLAB_SOURCE_DIR;
const fs::path kGolden = ISOLAB_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (kSource / "fixtures" / (name + ".json")).string(); }
std::string data(const std::string& name) { return (kSource / "tests" / "data" / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Compares against tests/golden/<name>; ISOLAB_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path file = kGolden / name;
  if (std::getenv("ISOLAB_UPDATE_GOLDEN")) {
    std::ofstream(file) << actual;
    return;
  }
  REQUIRE(fs::exists(file));
  CHECK(slurp(file) == actual);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "isolab-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

struct GoldenCase {
  std::vector<std::string> args;
  std::string golden;
  int code;
};

}  // namespace

TEST_CASE("golden outputs", "[cli]") {
  const std::vector<GoldenCase> cases{
      {{"fixtures", "--list"}, "fixtures-list.txt", 0},
      {{"--format", "json", "fixtures", "--list"}, "fixtures-list.json", 0},
      {{"validate", fixture("example-6")}, "validate-example-6.txt", 0},
      {{"--format", "json", "validate", fixture("example-4")}, "validate-example-4.json", 0},
      {{"validate", data("no-inverse.json")}, "validate-no-inverse.txt", 1},
      {{"--format", "json", "validate", data("no-inverse.json")}, "validate-no-inverse.json", 1},
      {{"validate", fixture("omega-star")}, "validate-omega-star.txt", 0},
      {{"validate", "--typed", fixture("minimal-join")}, "validate-minimal-join.txt", 0},
      {{"power", fixture("example-5"), "--", "-1", "-2"}, "power-example-5.txt", 0},
      {{"--format", "json", "power", fixture("example-6"), "--", "1", "2"}, "power-example-6.json", 0},
      {{"analyze", fixture("example-5")}, "analyze-example-5.txt", 0},
      {{"--format", "json", "analyze", fixture("example-3"), "--sop", "--classify", "--pip", "--special",
        "--lattice"},
       "analyze-example-3.json",
       0},
      {{"analyze", fixture("left-semi-assoc"), "--assoc"}, "analyze-left-semi-assoc.txt", 0},
      {{"--window", "5", "analyze", fixture("line-graph"), "--powerful", "1"}, "analyze-line-powerful.txt", 1},
      {{"analyze", "--typed", fixture("free-join")}, "analyze-free-join.txt", 0},
      {{"export-dot", "--lattice", fixture("example-4")}, "lattice-example-4.dot", 0},
      {{"export-dot", "--lattice", fixture("thm52-z2")}, "lattice-thm52-z2.dot", 0},
      {{"derive", (kSource / "fixtures/structures/chain-10.json").string()}, "derive-chain-10.json", 0},
      {{"diff", (kSource / "fixtures/structures/thm52-z2.json").string(), fixture("thm52-z2")},
       "diff-thm52.txt",
       0},
      {{"compose", "band", fixture("example-3"), fixture("example-7-z3")}, "band-example-3-z3.json", 0},
      {{"gen", "chain", "--n", "4"}, "gen-chain-4.json", 0},
      {{"--seed", "3", "--format", "json", "sweep", "--count", "25"}, "sweep-seed-3.json", 0},
  };
  for (const auto& c : cases) {
    INFO(c.golden);
    const Outcome o = call(c.args);
    CHECK(o.code == c.code);
    check_golden(c.golden, o.out);
  }
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"validate"}).code == 2);
  CHECK(call({"validate", fixture("example-6"), "--bogus"}).code == 2);
  CHECK(call({"--format", "xml", "validate", fixture("example-6")}).code == 2);
  CHECK(call({"gen", "cube"}).code == 2);
  CHECK(call({"power", fixture("example-5")}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("load errors name the file and position", "[cli]") {
  Outcome o = call({"validate", data("missing.json")});
  CHECK(o.code == 2);
  CHECK(o.err.find("missing.json") != std::string::npos);
  o = call({"validate", data("malformed.json")});
  CHECK(o.code == 2);
  CHECK(o.err.find("malformed.json") != std::string::npos);
  CHECK(o.err.find("line 4") != std::string::npos);
  o = call({"power", fixture("omega-star"), "--", "-9"});
  CHECK(o.code == 2);
  CHECK(o.err.find("window") != std::string::npos);
}

TEST_CASE("structured output is repeatable", "[cli]") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "analyze", fixture("thm52-z2"), "--lattice", "--sop"},
        std::vector<std::string>{"--format", "json", "validate", fixture("left-semi-assoc")},
        std::vector<std::string>{"--format", "json", "--seed", "9", "sweep", "--count", "10"}}) {
    const Outcome a = call(args), b = call(args);
    CHECK(a.out == b.out);
    CHECK_NOTHROW(Json::parse(a.out));
  }
}

TEST_CASE("derive output validates like the in-process table", "[cli]") {
  const fs::path structure = scratch("thm52.json");
  const fs::path table = scratch("thm52-table.json");
  REQUIRE(call({"gen", "thm52", "--n", "10", "--group", "z2", "-o", structure.string()}).code == 0);
  REQUIRE(call({"derive", structure.string(), "-o", table.string()}).code == 0);
  const Outcome o = call({"--format", "json", "validate", table.string()});
  CHECK(o.code == 0);
  const MultiTable t = derive_table(load_structure(structure)).to_table();
  CHECK(Json::parse(o.out) == report_to_json(t.alphabet(), validate_i_groupoid(t)));
}

TEST_CASE("derive reports distance notes", "[cli]") {
  const fs::path structure = scratch("tree.json");
  REQUIRE(call({"gen", "tree", "--degree", "3", "--radius", "8", "--max-label", "4", "-o", structure.string()})
              .code == 0);
  const Outcome o = call({"--format", "json", "derive", structure.string(), "-o", scratch("tree-table.json").string()});
  CHECK(o.code == 0);
  const Json doc = Json::parse(o.out);
  REQUIRE_FALSE(doc.at("notes").empty());
  CHECK(doc.at("notes")[0].at("kind") == "distance-superset");
}

TEST_CASE("diff exits 1 on a mismatch", "[cli]") {
  const Outcome o = call({"diff", (kSource / "fixtures/structures/chain-10.json").string(), fixture("example-4")});
  CHECK(o.code == 2);
  Json doc = read_json_file(fixture("example-6"));
  for (auto& p : doc["products"])
    if (p["left"] == "1" && p["right"] == "1") p["result"] = {"0"};
  const fs::path bad = scratch("corrupt-6.json");
  std::ofstream(bad) << doc.dump();
  const Outcome d = call({"diff", (kSource / "fixtures/structures/chain-10.json").string(), bad.string()});
  CHECK(d.code == 1);
  CHECK(d.out.find("1 differing cell") != std::string::npos);
}

TEST_CASE("join resolves component paths against the join file", "[cli]") {
  const fs::path out = scratch("join.json");
  REQUIRE(call({"join", data("join-spec.json"), "-o", out.string()}).code == 0);
  CHECK(call({"validate", "--typed", out.string()}).code == 0);
  CHECK(read_json_file(out) == *fixture_document("free-join"));
}

TEST_CASE("bundled fixture files match the built-in tables", "[cli]") {
  for (const auto& f : fixture_list()) {
    INFO(f.name);
    REQUIRE(fs::exists(fixture(f.name)));
    CHECK(read_json_file(fixture(f.name)) == *fixture_document(f.name));
    const Outcome o = call({"fixtures", "--emit", f.name});
    CHECK(o.out == slurp(fixture(f.name)));
  }
}

TEST_CASE("window flag changes rule tables", "[cli]") {
  const Outcome small = call({"--window", "3", "--format", "json", "power", fixture("omega-star"), "--", "-1", "-2"});
  CHECK(small.code == 0);
  CHECK(Json::parse(small.out).at("product") == Json{"-3"});
  CHECK(call({"--window", "2", "power", fixture("omega-star"), "--", "-1", "-2"}).code == 2);
}
