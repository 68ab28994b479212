#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "isolab/errors.hpp"
#include "isolab/fixtures.hpp"
#include "isolab/rules.hpp"
#include "isolab/table.hpp"
#include "isolab/table_io.hpp"
#include "support/oracle.hpp"

using namespace isolab;

namespace {

SignedAlphabet small_alphabet() {
  return SignedAlphabet({{"-1", Sign::negative, {}},
                         {"0", Sign::zero, {}},
                         {"a", Sign::positive, "b"},
                         {"b", Sign::positive, "a"},
                         {"c", Sign::positive, "c"}});
}

std::set<LabelIndex> as_std(const LabelSet& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("label sets agree with std::set on random operations", "[label-core]") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 150)(rng);
    LabelSet x(n), y(n);
    std::set<LabelIndex> sx, sy;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 3 == 0) {
        x.insert(i);
        sx.insert(i);
      }
      if (rng() % 3 == 0) {
        y.insert(i);
        sy.insert(i);
      }
    }
    REQUIRE(as_std(x) == sx);
    REQUIRE(x.size() == sx.size());
    std::set<LabelIndex> u = sx, inter, diff;
    u.insert(sy.begin(), sy.end());
    for (auto i : sx) (sy.count(i) ? inter : diff).insert(i);
    CHECK(as_std(x | y) == u);
    CHECK(as_std(x & y) == inter);
    CHECK(as_std(x.minus(y)) == diff);
    CHECK(x.is_subset_of(y) == (diff.empty()));
    CHECK(x.intersects(y) == !inter.empty());
  }
}

TEST_CASE("alphabet rejects malformed declarations", "[label-core]") {
  using D = std::vector<LabelDecl>;
  CHECK_THROWS_AS(SignedAlphabet(D{{"1", Sign::positive, "1"}}), InvalidAlphabet);
  CHECK_THROWS_AS(SignedAlphabet(D{{"0", Sign::zero, {}}, {"z", Sign::zero, {}}}), InvalidAlphabet);
  CHECK_THROWS_AS(SignedAlphabet(D{{"0", Sign::zero, {}}, {"0", Sign::negative, {}}}), InvalidAlphabet);
  CHECK_THROWS_AS(SignedAlphabet(D{{"0", Sign::zero, {}}, {"a", Sign::positive, {}}}), InvalidAlphabet);
  CHECK_THROWS_AS(SignedAlphabet(D{{"0", Sign::zero, {}}, {"n", Sign::negative, {}}, {"a", Sign::positive, "n"}}),
                  InvalidAlphabet);
  CHECK_THROWS_AS(SignedAlphabet(D{{"0", Sign::zero, {}},
                                   {"a", Sign::positive, "b"},
                                   {"b", Sign::positive, "b"}}),
                  InvalidAlphabet);
  CHECK_THROWS_AS(SignedAlphabet(D{{"0", Sign::zero, {}}, {"n", Sign::negative, "n"}}), InvalidAlphabet);
}

TEST_CASE("alphabet inverse is an involution on non-negative labels", "[label-core]") {
  SignedAlphabet a = small_alphabet();
  for (LabelIndex i = 0; i < a.size(); ++i) {
    if (a.is_negative(i)) {
      CHECK_THROWS_AS(a.inverse(i), NoInverse);
    } else {
      CHECK(a.inverse(a.inverse(i)) == i);
    }
  }
  CHECK(a.inverse(a.index("a")) == a.index("b"));
  CHECK(a.zero() == a.index("0"));
  CHECK_THROWS_AS(a.index("zz"), UnknownLabel);
  CHECK(format_set(a, a.negatives()) == "{-1}");
  CHECK(format_set(a, a.nonnegatives()) == "{0, a, b, c}");
}

TEST_CASE("builder fills the unit law and rejects gaps", "[label-core]") {
  SignedAlphabet a({{"0", Sign::zero, {}}, {"g", Sign::positive, "g"}});
  TableBuilder b(a);
  b.unit_law();
  CHECK_THROWS_AS(b.build(), MissingProduct);
  b.set("g", "g", {"0"});
  MultiTable t = b.build();
  CHECK(a.ids_of(t.product(a.index("0"), a.index("g"))) == std::vector<std::string>{"g"});
  CHECK(a.ids_of(t.product("g", "g")) == std::vector<std::string>{"0"});
  TableBuilder e(a);
  e.unit_law();
  CHECK_THROWS_AS(e.set(a.index("g"), a.index("g"), a.empty_set()).build(), EmptyProduct);
}

TEST_CASE("loading rejects incomplete or malformed documents", "[label-core]") {
  Json doc = *fixture_document("example-4");
  CHECK_NOTHROW(table_from_json(doc));

  Json missing = doc;
  missing["products"].erase(missing["products"].size() - 1);
  CHECK_THROWS_AS(table_from_json(missing), LoadError);

  Json empty = doc;
  for (auto& p : empty["products"])
    if (p["left"] == "1" && p["right"] == "1") p["result"] = Json::array();
  CHECK_THROWS_AS(table_from_json(empty), LoadError);

  Json unknown = doc;
  unknown["products"][0]["result"] = {"7"};
  CHECK_THROWS_AS(table_from_json(unknown), LoadError);

  Json neg_inverse = doc;
  neg_inverse["labels"][0]["inverse"] = "1";
  CHECK_THROWS_AS(table_from_json(neg_inverse), LoadError);

  CHECK_THROWS_AS(table_from_json(Json{{"rule", {{"name", "nope"}, {"window", 3}}}}), LoadError);
  CHECK_THROWS_AS(load_table("/nonexistent/table.json"), LoadError);
}

TEST_CASE("explicit documents round-trip", "[label-core]") {
  for (const auto& f : fixture_list()) {
    if (f.typed) continue;
    MultiTable t = *fixture_table(f.name);
    MultiTable back = table_from_json(table_to_json(t));
    CHECK(compare_tables(t, back).empty());
    CHECK(table_to_json(back) == table_to_json(t));
  }
}

TEST_CASE("rule tables stay inside their window", "[label-core]") {
  MultiTable w = omega_star_table(4);
  CHECK(w.window() == std::optional<std::size_t>(4));
  CHECK(w.alphabet().ids_of(w.product("-1", "-2")) == std::vector<std::string>{"-3"});
  CHECK_THROWS_AS(w.product("-2", "-3"), WindowExceeded);
  CHECK_THROWS_AS(w.index("-5"), WindowExceeded);
  CHECK_THROWS_AS(w.index("x"), UnknownLabel);
  CHECK_THROWS_AS(omega_star_table(0), BadParams);

  MultiTable line = line_graph_table(6);
  CHECK(line.alphabet().ids_of(line.product("2", "3")) == std::vector<std::string>{"1", "5"});
  CHECK_THROWS_AS(line.product("4", "3"), WindowExceeded);

  MultiTable z = z_successor_table(5);
  CHECK(z.alphabet().ids_of(z.product("s+2", "s-3")) == std::vector<std::string>{"s-1"});
  CHECK(z.alphabet().ids_of(z.product("s+2", "s-2")) == std::vector<std::string>{"0"});

  // a larger window only adds labels and decides more cells
  MultiTable big = line_graph_table(10);
  for (LabelIndex u = 0; u < line.size(); ++u)
    for (LabelIndex v = 0; v < line.size(); ++v) {
      const Cell& c = line.cell(u, v);
      if (c.exceeds_window) continue;
      const Cell& d = big.cell(big.index(line.alphabet().id(u)), big.index(line.alphabet().id(v)));
      CHECK(line.alphabet().ids_of(c.labels) == big.alphabet().ids_of(d.labels));
    }
}

TEST_CASE("word products are left folds of set products", "[label-core]") {
  std::mt19937_64 rng(5);
  for (const char* name : {"example-4", "example-5", "example-6", "thm52-z2", "example-7-z3"}) {
    MultiTable t = *fixture_table(name);
    oracle::Table ref = oracle::from_json(table_to_json(t));
    for (int i = 0; i < 50; ++i) {
      const std::size_t len = 1 + rng() % 5;
      std::vector<std::string> w;
      for (std::size_t k = 0; k < len; ++k) w.push_back(ref.ids[rng() % ref.ids.size()]);
      const auto got = t.alphabet().ids_of(word_product(t, w));
      const oracle::Labels expected = oracle::word(ref, w);
      CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
    }
  }
  CHECK_THROWS_AS(word_product(*fixture_table("example-4"), std::vector<std::string>{}), EmptyLabelSet);
}

TEST_CASE("set inverse is an involution", "[label-core]") {
  MultiTable t = *fixture_table("example-7-z3");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    LabelSet s = t.alphabet().empty_set();
    for (LabelIndex u = 0; u < t.size(); ++u)
      if (rng() % 2) s.insert(u);
    if (s.empty()) s.insert(0);
    CHECK(set_inverse(t, set_inverse(t, s)) == s);
  }
  CHECK_THROWS_AS(set_inverse(*fixture_table("example-3"), t.alphabet().all()), Error);
}

TEST_CASE("restriction needs zero, inverses and products", "[label-core]") {
  MultiTable t = *fixture_table("example-4");
  const auto& a = t.alphabet();
  CHECK_NOTHROW(restrict_to(t, a.set_of({"0", "1"})));
  CHECK_THROWS_AS(restrict_to(t, a.set_of({"-1"})), ClosureViolation);
  MultiTable g = *fixture_table("example-7-z3");
  CHECK_THROWS_AS(restrict_to(g, g.alphabet().set_of({"0", "g"})), ClosureViolation);
  MultiTable r = restrict_to(t, a.set_of({"-1", "0"}));
  CHECK(r.size() == 2);
  CHECK(r.alphabet().ids_of(r.product("-1", "-1")) == std::vector<std::string>{"-1"});
}

TEST_CASE("compare_tables reports changed cells by id", "[label-core]") {
  Json doc = *fixture_document("example-6");
  MultiTable t = table_from_json(doc);
  for (auto& p : doc["products"])
    if (p["left"] == "1" && p["right"] == "1") p["result"] = {"0"};
  auto diffs = compare_tables(t, table_from_json(doc));
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].left == "1");
  CHECK(diffs[0].expected_ids == std::vector<std::string>{"1"});
  CHECK(diffs[0].actual_ids == std::vector<std::string>{"0"});
  CHECK_THROWS_AS(compare_tables(t, *fixture_table("example-4")), AlphabetMismatch);
}
