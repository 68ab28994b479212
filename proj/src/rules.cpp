#include "isolab/rules.hpp"

#include <charconv>
#include <cstdlib>
#include <memory>

#include "isolab/constructions.hpp"
#include "isolab/errors.hpp"

namespace isolab {

namespace {

std::optional<long> parse_int(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

void require_window(std::size_t window) {
  if (window == 0) throw BadParams("rule window must be at least 1");
}

std::shared_ptr<const RuleInfo> info(std::string name, std::size_t window, bool neg_finite,
                                     std::function<bool(std::string_view)> recognizes) {
  return std::make_shared<RuleInfo>(
      RuleInfo{std::move(name), window, neg_finite, std::move(recognizes)});
}

}  // namespace

MultiTable omega_star_table(std::size_t window) {
  require_window(window);
  const long w = static_cast<long>(window);
  std::vector<LabelDecl> decls{{"0", Sign::zero, {}}};
  for (long k = 1; k <= w; ++k) decls.push_back({std::to_string(-k), Sign::negative, {}});
  SignedAlphabet a(std::move(decls));
  TableBuilder b(a);
  b.unit_law();
  for (long m = 1; m <= w; ++m) {
    for (long n = 1; n <= w; ++n) {
      Cell c{a.empty_set()};
      if (m + n <= w)
        c.labels.insert(a.index(std::to_string(-(m + n))));
      else
        c.exceeds_window = true;
      b.set(static_cast<LabelIndex>(m), static_cast<LabelIndex>(n), c);
    }
  }
  return b.build(info("omega-star", window, false, [](std::string_view id) {
    auto v = parse_int(id);
    return v && *v <= 0;
  }));
}

MultiTable line_graph_table(std::size_t window) {
  require_window(window);
  const long w = static_cast<long>(window);
  std::vector<LabelDecl> decls{{"0", Sign::zero, {}}};
  for (long k = 1; k <= w; ++k) {
    auto id = std::to_string(k);
    decls.push_back({id, Sign::positive, id});
  }
  SignedAlphabet a(std::move(decls));
  TableBuilder b(a);
  for (long m = 0; m <= w; ++m) {
    for (long n = 0; n <= w; ++n) {
      Cell c{a.empty_set()};
      c.labels.insert(static_cast<LabelIndex>(std::labs(m - n)));
      if (m + n <= w)
        c.labels.insert(static_cast<LabelIndex>(m + n));
      else
        c.exceeds_window = true;
      b.set(static_cast<LabelIndex>(m), static_cast<LabelIndex>(n), c);
    }
  }
  return b.build(info("line-graph", window, true, [](std::string_view id) {
    auto v = parse_int(id);
    return v && *v >= 0;
  }));
}

namespace {

std::string shift_id(long k) {
  if (k == 0) return "0";
  return k > 0 ? "s+" + std::to_string(k) : "s-" + std::to_string(-k);
}

}  // namespace

MultiTable z_successor_table(std::size_t window) {
  require_window(window);
  const long w = static_cast<long>(window);
  std::vector<LabelDecl> decls{{"0", Sign::zero, {}}};
  for (long k = 1; k <= w; ++k) {
    decls.push_back({shift_id(k), Sign::positive, shift_id(-k)});
    decls.push_back({shift_id(-k), Sign::positive, shift_id(k)});
  }
  SignedAlphabet a(std::move(decls));
  TableBuilder b(a);
  for (long m = -w; m <= w; ++m) {
    for (long n = -w; n <= w; ++n) {
      Cell c{a.empty_set()};
      if (std::labs(m + n) <= w)
        c.labels.insert(a.index(shift_id(m + n)));
      else
        c.exceeds_window = true;
      b.set(a.index(shift_id(m)), a.index(shift_id(n)), c);
    }
  }
  return b.build(info("z-successor", window, true, [](std::string_view id) {
    if (id == "0") return true;
    if (id.size() < 3 || id[0] != 's' || (id[1] != '+' && id[1] != '-')) return false;
    auto v = parse_int(id.substr(2));
    return v && *v > 0;
  }));
}

MultiTable left_semi_assoc_table(std::size_t window) {
  require_window(window);
  std::vector<LabelDecl> decls{{"u1", Sign::negative, {}},
                               {"x", Sign::negative, {}},
                               {"v", Sign::negative, {}},
                               {"0", Sign::zero, {}},
                               {"u2", Sign::positive, "u2"},
                               {"u3", Sign::positive, "u3"}};
  for (std::size_t k = 1; k <= window; ++k) {
    auto id = "w" + std::to_string(k);
    decls.push_back({id, Sign::positive, id});
  }
  SignedAlphabet a(std::move(decls));
  const LabelSet neg = a.negatives();
  LabelSet pos = a.nonnegatives();
  pos.erase(a.zero());
  const LabelIndex u1 = a.index("u1"), x = a.index("x"), v = a.index("v");

  TableBuilder b(a);
  b.unit_law();
  for (auto p : pos) {
    for (auto q : pos) {
      Cell c{pos, true, false};
      if (p == q) c.labels.insert(a.zero());
      b.set(p, q, c);
    }
    for (auto n : neg) b.set(p, n, a.singleton(n));
    LabelSet u1p = a.singleton(u1);
    u1p.insert(x);
    LabelSet xp = a.singleton(x);
    xp.insert(v);
    b.set(u1, p, u1p);
    b.set(x, p, xp);
    b.set(v, p, a.singleton(v));
  }
  for (auto m : neg)
    for (auto n : neg) b.set(m, n, neg);
  return b.build(info("left-semi-assoc", window, true, [](std::string_view id) {
    if (id == "u1" || id == "x" || id == "v" || id == "0" || id == "u2" || id == "u3")
      return true;
    if (id.size() < 2 || id[0] != 'w') return false;
    auto k = parse_int(id.substr(1));
    return k && *k >= 1;
  }));
}

MultiTable omega_star_band_z3(std::size_t window) {
  return band_compose(omega_star_table(window), group_table(cyclic_group(3)))
      .renamed_rule("omega-star-band-z3");
}

const std::vector<RuleEntry>& rule_registry() {
  static const std::vector<RuleEntry> entries{
      {"omega-star", 6, &omega_star_table},
      {"line-graph", 8, &line_graph_table},
      {"z-successor", 5, &z_successor_table},
      {"left-semi-assoc", 3, &left_semi_assoc_table},
      {"omega-star-band-z3", 6, &omega_star_band_z3},
  };
  return entries;
}

std::optional<MultiTable> rule_table(std::string_view name, std::optional<std::size_t> window) {
  for (const auto& e : rule_registry())
    if (e.name == name) return e.make(window.value_or(e.default_window));
  return std::nullopt;
}

}  // namespace isolab
