#include "isolab/fixtures.hpp"

#include "isolab/constructions.hpp"
#include "isolab/rules.hpp"
#include "isolab/typed_io.hpp"

namespace isolab {

namespace {

MultiTable example_1() {
  SignedAlphabet a({{"0", Sign::zero, {}}});
  return TableBuilder(a).unit_law().build();
}

MultiTable example_2() {
  SignedAlphabet a({{"0", Sign::zero, {}}, {"1", Sign::positive, "1"}});
  TableBuilder b(a);
  b.unit_law().set("1", "1", {"0"});
  return b.build();
}

MultiTable example_4() {
  SignedAlphabet a({{"-1", Sign::negative, {}}, {"0", Sign::zero, {}}, {"1", Sign::positive, "1"}});
  TableBuilder b(a);
  b.unit_law();
  b.set("-1", "-1", {"-1"}).set("-1", "1", {"-1"}).set("1", "-1", {"-1"}).set("1", "1", {"0"});
  return b.build();
}

MultiTable example_5() {
  SignedAlphabet a({{"-2", Sign::negative, {}}, {"-1", Sign::negative, {}}, {"0", Sign::zero, {}}});
  TableBuilder b(a);
  b.unit_law();
  b.set("-2", "-2", {"-2"}).set("-2", "-1", {"-1"}).set("-1", "-2", {"-1"}).set("-1", "-1", {"-1"});
  return b.build();
}

MultiTable example_6() {
  SignedAlphabet a({{"0", Sign::zero, {}}, {"1", Sign::positive, "2"}, {"2", Sign::positive, "1"}});
  TableBuilder b(a);
  b.unit_law();
  b.set("1", "1", {"1"}).set("2", "2", {"2"}).set("1", "2", {"0", "1", "2"}).set("2", "1", {"0", "1", "2"});
  return b.build();
}

struct Untyped {
  const char* name;
  const char* description;
  MultiTable (*make)();
  const char* rule;  // non-null for rule-backed fixtures
};

const Untyped kUntyped[] = {
    {"example-1", "single unit label", &example_1, nullptr},
    {"example-2", "one self-inverse label with 1·1 = {0}", &example_2, nullptr},
    {"example-3", "{-1, 0} with (-1)·(-1) = {-1}", &saturating_negative_monoid, nullptr},
    {"example-4", "{-1, 0, 1} with 1·1 = {0} and -1 absorbing", &example_4, nullptr},
    {"example-5", "{-2, -1, 0} with -1 absorbing -2", &example_5, nullptr},
    {"example-6", "dense order: 0 (=), 1 (<), 2 (>)", &example_6, nullptr},
    {"example-7-z3", "cyclic group of order 3", [] { return group_table(cyclic_group(3)); }, nullptr},
    {"z-successor", "shifts on the integers", nullptr, "z-successor"},
    {"line-graph", "distances on the infinite line", nullptr, "line-graph"},
    {"omega-star", "{0, -1, -2, ...} under addition", nullptr, "omega-star"},
    {"left-semi-assoc", "strictly left semi-associative triple over an infinite product", nullptr,
     "left-semi-assoc"},
    {"thm52-z2", "{-1, 0} glued to the group of order 2",
     [] { return band_compose(saturating_negative_monoid(), group_table(cyclic_group(2))); },
     nullptr},
    {"thm53-z3", "omega-star glued to the group of order 3", nullptr, "omega-star-band-z3"},
};

JoinSpec minimal_join_spec() {
  SignedAlphabet z({{"0", Sign::zero, {}}});
  MultiTable unit = TableBuilder(z).unit_law().build();
  JoinSpec s;
  s.sorts = {"p", "q"};
  s.components = {unit, unit};
  s.cross_labels = {{"a", Sign::positive, "b", "p", "q"}, {"b", Sign::positive, "a", "q", "p"}};
  s.cross_products = {{"p", "q", "p", "a", "b", {"0"}}, {"q", "p", "q", "b", "a", {"0"}}};
  return s;
}

JoinSpec free_join_spec() {
  JoinSpec s;
  s.sorts = {"p", "q"};
  MultiTable g = group_table(cyclic_group(3));
  s.components = {saturating_negative_monoid(), g};
  return s;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_list() {
  static const std::vector<FixtureInfo> list = [] {
    std::vector<FixtureInfo> out;
    for (const auto& u : kUntyped) out.push_back({u.name, u.description, false});
    out.push_back({"minimal-join", "two one-point sorts joined by a pair of inverse labels", true});
    out.push_back({"free-join", "example-3 and the group of order 3 with no cross labels", true});
    return out;
  }();
  return list;
}

std::optional<MultiTable> fixture_table(std::string_view name, std::optional<std::size_t> window) {
  for (const auto& u : kUntyped) {
    if (name != u.name) continue;
    if (u.rule) return rule_table(u.rule, window);
    return u.make();
  }
  return std::nullopt;
}

std::optional<TypedTable> fixture_typed(std::string_view name) {
  if (name == "minimal-join") return join_build(minimal_join_spec());
  if (name == "free-join") return join_build(free_join_spec());
  return std::nullopt;
}

std::optional<Json> fixture_document(std::string_view name) {
  if (auto t = fixture_table(name)) return table_to_json(*t);
  if (auto t = fixture_typed(name)) return typed_to_json(*t);
  return std::nullopt;
}

}  // namespace isolab
