#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "isolab/constructions.hpp"
#include "isolab/errors.hpp"
#include "isolab/fixtures.hpp"
#include "isolab/random_tables.hpp"
#include "isolab/typed.hpp"
#include "isolab/typed_io.hpp"

using namespace isolab;

namespace {

using Ids = std::vector<std::string>;

// Relabels every non-zero label with a prefix so components stay disjoint.
MultiTable prefixed(const MultiTable& t, const std::string& prefix) {
  const auto& a = t.alphabet();
  auto rename = [&](const std::string& id) { return id == a.id(a.zero()) ? id : prefix + id; };
  std::vector<LabelDecl> decls;
  for (auto d : a.decls()) {
    d.id = rename(d.id);
    if (!d.inverse.empty()) d.inverse = rename(d.inverse);
    decls.push_back(d);
  }
  SignedAlphabet b(decls);
  TableBuilder tb(b);
  for (LabelIndex u = 0; u < t.size(); ++u)
    for (LabelIndex v = 0; v < t.size(); ++v) tb.set(u, v, t.cell(u, v));
  return tb.build();
}

bool same_products(const MultiTable& t, const TypedTable& s) {
  for (LabelIndex u = 0; u < t.size(); ++u)
    for (LabelIndex v = 0; v < t.size(); ++v) {
      const TypedCell* c = s.product({0, s.alphabet().index(t.alphabet().id(u)), 0},
                                     {0, s.alphabet().index(t.alphabet().id(v)), 0});
      if (!c) return false;
      if (s.alphabet().ids_of(c->labels) != t.alphabet().ids_of(t.product(u, v))) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("minimal nontrivial join", "[typed]") {
  const TypedTable t = *fixture_typed("minimal-join");
  const ValidationReport r = validate_ir_structure(t);
  CHECK(r.overall() == CheckStatus::pass);
  const SortIndex p = t.sort_index("p"), q = t.sort_index("q");
  const LabelIndex a = t.alphabet().index("a"), b = t.alphabet().index("b");
  CHECK(t.alphabet().ids_of(t.mu(p, q)) == Ids{"a"});
  CHECK(t.alphabet().ids_of(t.mu(q, p)) == Ids{"b"});
  const TypedCell* c = t.product({p, a, q}, {q, b, p});
  REQUIRE(c);
  CHECK(t.alphabet().ids_of(c->labels) == Ids{"0"});
  // middle sorts disagree
  CHECK(t.product({p, a, q}, {p, a, q}) == nullptr);
}

TEST_CASE("free joins of valid components are I_R-structures", "[typed]") {
  CHECK(validate_ir_structure(*fixture_typed("free-join")).overall() == CheckStatus::pass);
  Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    JoinSpec s;
    s.sorts = {"p", "q", "r"};
    s.components = {prefixed(random_valid_table(rng), "p:"), prefixed(random_valid_table(rng), "q:"),
                    prefixed(random_valid_table(rng), "r:")};
    const TypedTable t = join_build(s);
    CHECK(validate_ir_structure(t).overall() == CheckStatus::pass);
    for (SortIndex x = 0; x < 3; ++x)
      for (SortIndex y = 0; y < 3; ++y)
        if (x != y) CHECK(t.mu(x, y).empty());
    for (SortIndex x = 0; x < 3; ++x) CHECK(compare_tables(s.components[x], diagonal(t, x)).empty());
  }
}

TEST_CASE("join_build enforces regularity", "[typed]") {
  JoinSpec s;
  s.sorts = {"p", "q"};
  const MultiTable g = group_table(cyclic_group(2));
  s.components = {g, g};
  CHECK_THROWS_AS(join_build(s), RegularityViolation);
  s.components = {g};
  CHECK_THROWS_AS(join_build(s), RegularityViolation);
}

TEST_CASE("a cross label whose products miss 0 fails the inverse check", "[typed]") {
  SignedAlphabet z({{"0", Sign::zero, {}}});
  const MultiTable unit = TableBuilder(z).unit_law().build();
  JoinSpec s;
  s.sorts = {"p", "q"};
  s.components = {prefixed(group_table(cyclic_group(2)), "p:"), unit};
  s.cross_labels = {{"a", Sign::positive, "b", "p", "q"}, {"b", Sign::positive, "a", "q", "p"}};
  // a·b lands on the group element instead of 0
  s.cross_products = {{"p", "q", "p", "a", "b", {"p:g"}},
                      {"q", "p", "q", "b", "a", {"0"}},
                      {"p", "p", "q", "p:g", "a", {"a"}},
                      {"q", "p", "p", "b", "p:g", {"b"}}};
  const TypedTable t = join_build(s);
  const ValidationReport r = validate_ir_structure(t);
  CHECK(r.check("IR6-inverse").status == CheckStatus::fail);
  CHECK(r.overall() == CheckStatus::fail);

  s.cross_labels[0].from = "q";
  s.cross_labels[0].to = "p";
  CHECK_THROWS_AS(join_build(s), RegularityViolation);
}

TEST_CASE("missing cross products are reported", "[typed]") {
  SignedAlphabet z({{"0", Sign::zero, {}}});
  const MultiTable unit = TableBuilder(z).unit_law().build();
  JoinSpec s;
  s.sorts = {"p", "q"};
  s.components = {unit, unit};
  s.cross_labels = {{"a", Sign::positive, "b", "p", "q"}, {"b", Sign::positive, "a", "q", "p"}};
  CHECK_THROWS_AS(join_build(s), MissingProduct);
}

TEST_CASE("single-sort embedding keeps every product", "[typed]") {
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const MultiTable t = random_valid_table(rng);
    const TypedTable s = single_sort(t);
    CHECK(same_products(t, s));
    CHECK(compare_tables(t, diagonal(s, 0)).empty());
    CHECK(validate_ir_structure(s).passed() == validate_i_groupoid(t).passed());
  }
}

TEST_CASE("typed set products are unions of member products", "[typed]") {
  const TypedTable t = *fixture_typed("free-join");
  std::mt19937_64 rng(43);
  const auto& a = t.alphabet();
  for (int i = 0; i < 200; ++i) {
    const SortIndex p = rng() % 2, q = rng() % 2;
    const LabelSet& m = t.mu(p, p);
    const LabelSet& n = t.mu(q, q);
    LabelSet x = a.empty_set(), y = a.empty_set();
    for (auto u : m)
      if (rng() % 2) x.insert(u);
    for (auto v : n)
      if (rng() % 2) y.insert(v);
    if (x.empty()) x.insert(a.zero());
    if (y.empty()) y.insert(a.zero());
    const auto r = typed_set_product(t, {p, p, x}, {q, q, y});
    if (p != q) {
      CHECK_FALSE(r);
      continue;
    }
    REQUIRE(r);
    LabelSet expect = a.empty_set();
    for (auto u : x)
      for (auto v : y) expect |= t.product({p, u, p}, {p, v, p})->labels;
    CHECK(r->labels == expect);
  }
  // unit law lifted to triples
  const SortIndex q = t.sort_index("q");
  const LabelSet all = t.mu(q, q);
  CHECK(typed_set_product(t, {q, q, a.singleton(a.zero())}, {q, q, all})->labels == all);
}

TEST_CASE("typed analysis of joins", "[typed]") {
  JoinSpec groups;
  groups.sorts = {"p", "q"};
  groups.components = {prefixed(group_table(cyclic_group(2)), "p:"),
                       prefixed(group_table(klein_four_group()), "q:")};
  const TypedAnalysis g = typed_analysis(join_build(groups));
  CHECK(g.join_of_groups);
  CHECK(g.overall.equivalence);
  CHECK(g.deterministic_closed);

  const TypedAnalysis f = typed_analysis(*fixture_typed("free-join"));
  CHECK_FALSE(f.join_of_groups);
  CHECK_FALSE(f.overall.partial_order);
  CHECK_FALSE(f.overall.equivalence);
  REQUIRE(f.sorts.size() == 2);
  CHECK(f.sorts[0].relation.partial_order);
  CHECK(f.sorts[1].relation.equivalence);

  const MultiTable vi = *fixture_table("example-6");
  const TypedAnalysis s = typed_analysis(single_sort(vi));
  const RelationClass c = classify_relation(vi);
  CHECK(s.overall.transitive == c.transitive);
  CHECK(s.overall.partial_order == c.partial_order);
  CHECK(s.overall.equivalence == c.equivalence);
  CHECK(s.deterministic == deterministic_core(vi));
  CHECK_FALSE(s.join_of_groups);
}

TEST_CASE("typed documents round-trip", "[typed]") {
  for (const char* name : {"minimal-join", "free-join"}) {
    const TypedTable t = *fixture_typed(name);
    const Json doc = typed_to_json(t);
    const TypedTable back = typed_from_json(doc);
    CHECK(typed_to_json(back) == doc);
    CHECK(back.products().size() == t.products().size());
  }
  Json bad = typed_to_json(*fixture_typed("minimal-join"));
  bad["products"].clear();
  CHECK_THROWS_AS(typed_from_json(bad), Error);
}

TEST_CASE("join specs load components inline", "[typed]") {
  const Json spec = {
      {"sorts", {"p", "q"}},
      {"components", {{"p", *fixture_document("example-3")}, {"q", *fixture_document("example-7-z3")}}}};
  const TypedTable t = join_build(join_spec_from_json(spec));
  CHECK(validate_ir_structure(t).overall() == CheckStatus::pass);
  CHECK(typed_to_json(t) == typed_to_json(*fixture_typed("free-join")));
}
