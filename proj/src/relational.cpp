#include "isolab/relational.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_map>

#include "isolab/errors.hpp"

namespace isolab {

std::string_view to_string(DerivedStatus s) {
  switch (s) {
    case DerivedStatus::complete:
      return "complete";
    case DerivedStatus::truncated:
      return "truncated";
    case DerivedStatus::empty:
      return "empty-composition";
  }
  return "?";
}

void check_structure(const RelationalStructure& s) {
  std::set<Element> elems(s.universe.begin(), s.universe.end());
  if (elems.size() != s.universe.size()) throw StructureError("duplicate universe element");
  if (s.labels.size() != s.relations.size())
    throw StructureError("every label needs exactly one relation");
  std::set<std::string> names(s.labels.begin(), s.labels.end());
  if (names.size() != s.labels.size()) throw StructureError("duplicate relation label");

  std::set<std::pair<Element, Element>> seen;
  std::optional<std::size_t> zero;
  for (std::size_t l = 0; l < s.labels.size(); ++l) {
    if (s.labels[l] == s.zero) zero = l;
    for (const auto& pr : s.relations[l]) {
      if (!elems.count(pr.first) || !elems.count(pr.second))
        throw StructureError("relation " + s.labels[l] + " leaves the universe");
      if (!seen.insert(pr).second)
        throw StructureError("pair (" + std::to_string(pr.first) + "," +
                             std::to_string(pr.second) + ") carries two labels");
    }
  }
  if (!zero) throw IdentityMissing("no relation for the zero label " + s.zero);
  std::set<std::pair<Element, Element>> id, zr(s.relations[*zero].begin(), s.relations[*zero].end());
  for (auto e : s.universe) id.emplace(e, e);
  if (id != zr) throw IdentityMissing("relation of " + s.zero + " is not the identity");
  if (s.window.empty()) throw EmptyWindow("empty window");
  for (auto e : s.window)
    if (!elems.count(e)) throw StructureError("window element " + std::to_string(e) + " not in universe");
}

namespace {

struct Indexed {
  std::size_t n = 0;
  std::unordered_map<Element, std::uint32_t> index;
  // out[l][a]: targets of a under label l
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  std::unordered_map<std::uint64_t, std::uint32_t> label_of;  // a*n + c
  std::vector<std::uint32_t> window;
};

Indexed index_structure(const RelationalStructure& s) {
  Indexed x;
  x.n = s.universe.size();
  for (std::uint32_t i = 0; i < x.n; ++i) x.index.emplace(s.universe[i], i);
  x.out.assign(s.labels.size(), std::vector<std::vector<std::uint32_t>>(x.n));
  for (std::uint32_t l = 0; l < s.labels.size(); ++l) {
    for (const auto& [a, b] : s.relations[l]) {
      const auto ia = x.index.at(a), ib = x.index.at(b);
      x.out[l][ia].push_back(ib);
      x.label_of.emplace(std::uint64_t{ia} * x.n + ib, l);
    }
  }
  for (auto e : s.window) x.window.push_back(x.index.at(e));
  return x;
}

}  // namespace

DerivedTable derive_table(const RelationalStructure& s, Semantics semantics) {
  check_structure(s);
  const Indexed x = index_structure(s);

  // labels whose relation starts somewhere in the window
  std::vector<std::uint32_t> kept;
  std::vector<int> pos_of(s.labels.size(), -1);
  for (std::uint32_t l = 0; l < s.labels.size(); ++l) {
    bool meets = s.labels[l] == s.zero;
    for (auto a : x.window) meets = meets || !x.out[l][a].empty();
    if (meets) {
      pos_of[l] = static_cast<int>(kept.size());
      kept.push_back(l);
    }
  }
  const std::size_t k = kept.size();

  std::vector<DerivedCell> cells(k * k);
  std::vector<std::uint32_t> mark(x.n, 0), via(x.n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      DerivedCell& cell = cells[i * k + j];
      cell.labels = LabelSet(k);
      std::vector<std::optional<std::array<Element, 3>>> wit(k);
      std::vector<bool> meets(k, false), contained(k, true);
      bool any = false, truncated = false;
      for (auto a : x.window) {
        ++stamp;
        std::vector<std::uint32_t> reached;
        for (auto b : x.out[kept[i]][a]) {
          for (auto c : x.out[kept[j]][b]) {
            if (mark[c] == stamp) continue;
            mark[c] = stamp;
            via[c] = b;
            reached.push_back(c);
          }
        }
        any = any || !reached.empty();
        for (auto c : reached) {
          auto it = x.label_of.find(std::uint64_t{a} * x.n + c);
          if (it == x.label_of.end() || pos_of[it->second] < 0) {
            truncated = true;
            continue;
          }
          const auto v = static_cast<std::size_t>(pos_of[it->second]);
          if (!wit[v]) wit[v] = std::array<Element, 3>{s.universe[a], s.universe[via[c]], s.universe[c]};
        }
        if (semantics == Semantics::universal) {
          for (std::size_t v = 0; v < k; ++v) {
            for (auto c : x.out[kept[v]][a]) {
              meets[v] = true;
              if (mark[c] != stamp) contained[v] = false;
            }
          }
        }
      }
      for (std::size_t v = 0; v < k; ++v) {
        bool member = semantics == Semantics::existential ? wit[v].has_value()
                                                          : meets[v] && contained[v] && wit[v];
        if (member) {
          cell.labels.insert(v);
          cell.witnesses.push_back(*wit[v]);
        }
      }
      cell.status = !any ? DerivedStatus::empty
                         : truncated ? DerivedStatus::truncated : DerivedStatus::complete;
    }
  }

  // signs: explicit declarations first, then 0 ∈ u·w
  std::size_t zpos = static_cast<std::size_t>(pos_of[std::find(s.labels.begin(), s.labels.end(), s.zero) - s.labels.begin()]);
  std::vector<LabelDecl> decls;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string& id = s.labels[kept[i]];
    LabelDecl d{id, Sign::positive, {}};
    if (i == zpos) {
      d.sign = Sign::zero;
      decls.push_back(d);
      continue;
    }
    auto sg = s.signs.find(id);
    if (sg != s.signs.end()) d.sign = sg->second;
    if (d.sign == Sign::zero) throw StructureError("label " + id + " is declared zero");
    if (d.sign == Sign::positive) {
      auto inv = s.inverses.find(id);
      if (inv != s.inverses.end()) {
        d.inverse = inv->second;
      } else {
        std::vector<std::size_t> cands;
        for (std::size_t w = 0; w < k; ++w)
          if (cells[i * k + w].labels.contains(zpos) && cells[w * k + i].labels.contains(zpos))
            cands.push_back(w);
        if (cands.size() > 1) throw StructureError("label " + id + " has several inverses");
        if (cands.empty()) {
          if (sg != s.signs.end()) throw StructureError("positive label " + id + " has no inverse");
          d.sign = Sign::negative;
        } else {
          d.inverse = s.labels[kept[cands.front()]];
        }
      }
    }
    decls.push_back(std::move(d));
  }
  DerivedTable out;
  try {
    out.alphabet = SignedAlphabet(std::move(decls));
  } catch (const InvalidAlphabet& e) {
    throw StructureError(std::string("derived labels: ") + e.what());
  }
  out.cells = std::move(cells);
  out.semantics = semantics;
  return out;
}

MultiTable DerivedTable::to_table() const {
  const std::size_t n = alphabet.size();
  std::vector<Cell> out;
  out.reserve(n * n);
  for (LabelIndex u = 0; u < n; ++u) {
    for (LabelIndex v = 0; v < n; ++v) {
      const DerivedCell& c = cell(u, v);
      if (c.status == DerivedStatus::empty)
        throw EmptyProduct("no composite for " + alphabet.id(u) + "·" + alphabet.id(v) +
                           " starts in the window");
      out.push_back(Cell{c.labels, false, c.status == DerivedStatus::truncated});
    }
  }
  return MultiTable(alphabet, std::move(out));
}

bool witness_holds(const RelationalStructure& s, const std::string& u1, const std::string& u2,
                   const std::string& v, const std::array<Element, 3>& w) {
  auto rel = [&](const std::string& l, Element a, Element b) {
    for (std::size_t i = 0; i < s.labels.size(); ++i)
      if (s.labels[i] == l)
        return std::find(s.relations[i].begin(), s.relations[i].end(), std::pair{a, b}) !=
               s.relations[i].end();
    return false;
  };
  const bool in_window = std::find(s.window.begin(), s.window.end(), w[0]) != s.window.end();
  return in_window && rel(u1, w[0], w[1]) && rel(u2, w[1], w[2]) && rel(v, w[0], w[2]);
}

namespace {

std::vector<Element> centered(std::size_t n) {
  std::vector<Element> u;
  const auto lo = -static_cast<Element>((n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) u.push_back(lo + static_cast<Element>(i));
  return u;
}

// elements whose index keeps `margin` positions to both ends
std::vector<Element> inner(const std::vector<Element>& u, std::size_t margin) {
  std::vector<Element> w;
  for (std::size_t i = margin; i + margin < u.size(); ++i) w.push_back(u[i]);
  return w;
}

std::size_t chain_margin(std::size_t n) { return std::min<std::size_t>(3, (n - 1) / 2); }

}  // namespace

RelationalStructure chain_structure(std::size_t n) {
  if (n == 0) throw BadParams("chain needs at least one element");
  RelationalStructure s;
  for (std::size_t i = 0; i < n; ++i) s.universe.push_back(static_cast<Element>(i));
  s.labels = {"0"};
  s.relations.resize(1);
  for (auto e : s.universe) s.relations[0].emplace_back(e, e);
  if (n > 1) {
    s.labels.push_back("1");
    s.labels.push_back("2");
    s.relations.resize(3);
    for (auto a : s.universe)
      for (auto b : s.universe)
        if (a < b) {
          s.relations[1].emplace_back(a, b);
          s.relations[2].emplace_back(b, a);
        }
    s.signs = {{"1", Sign::positive}, {"2", Sign::positive}};
    s.inverses = {{"1", "2"}, {"2", "1"}};
  }
  s.window = inner(s.universe, chain_margin(n));
  return s;
}

RelationalStructure path_structure(std::size_t n, std::size_t max_label) {
  if (max_label == 0) throw BadParams("path needs max_label >= 1");
  RelationalStructure s;
  s.universe = centered(n);
  s.window = inner(s.universe, 2 * max_label);
  if (s.window.empty()) throw BadParams("path too short for max_label " + std::to_string(max_label));
  s.relations.resize(max_label + 1);
  for (std::size_t d = 0; d <= max_label; ++d) s.labels.push_back(std::to_string(d));
  for (auto a : s.universe)
    for (auto c : s.universe) {
      const auto d = static_cast<std::size_t>(std::llabs(a - c));
      if (d <= max_label) s.relations[d].emplace_back(a, c);
    }
  return s;
}

RelationalStructure tree_structure(std::size_t degree, std::size_t radius, std::size_t max_label) {
  if (degree < 2) throw BadParams("tree degree must be at least 2");
  if (max_label == 0 || radius < 2 * max_label)
    throw BadParams("tree radius must be at least twice max_label");
  std::vector<std::size_t> depth{0};
  std::vector<std::vector<std::uint32_t>> adj(1);
  for (std::size_t i = 0; i < depth.size(); ++i) {
    if (depth[i] == radius) continue;
    const std::size_t kids = i == 0 ? degree : degree - 1;
    for (std::size_t c = 0; c < kids; ++c) {
      const auto id = static_cast<std::uint32_t>(depth.size());
      depth.push_back(depth[i] + 1);
      adj.emplace_back();
      adj[i].push_back(id);
      adj[id].push_back(static_cast<std::uint32_t>(i));
    }
  }
  RelationalStructure s;
  const std::size_t n = depth.size();
  for (std::size_t i = 0; i < n; ++i) s.universe.push_back(static_cast<Element>(i));
  for (std::size_t d = 0; d <= max_label; ++d) s.labels.push_back(std::to_string(d));
  s.relations.resize(max_label + 1);
  std::vector<std::size_t> dist(n, SIZE_MAX);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::uint32_t> seen{static_cast<std::uint32_t>(a)};
    dist[a] = 0;
    for (std::size_t h = 0; h < seen.size(); ++h) {
      const auto x = seen[h];
      if (dist[x] == max_label) continue;
      for (auto y : adj[x])
        if (dist[y] == SIZE_MAX) {
          dist[y] = dist[x] + 1;
          seen.push_back(y);
        }
    }
    for (auto c : seen) {
      s.relations[dist[c]].emplace_back(static_cast<Element>(a), static_cast<Element>(c));
      dist[c] = SIZE_MAX;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (depth[i] + 2 * max_label <= radius) s.window.push_back(static_cast<Element>(i));
  return s;
}

RelationalStructure cayley_structure(const CayleyTable& g) {
  const MultiTable t = group_table(g);
  const auto& a = t.alphabet();
  RelationalStructure s;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) s.universe.push_back(static_cast<Element>(i));
  s.relations.resize(n);
  for (LabelIndex x = 0; x < n; ++x) {
    s.labels.push_back(a.id(x));
    for (LabelIndex e = 0; e < n; ++e)
      s.relations[x].emplace_back(static_cast<Element>(e),
                                  static_cast<Element>(*t.product(e, x).begin()));
    if (x != a.zero()) {
      s.signs[a.id(x)] = Sign::positive;
      s.inverses[a.id(x)] = a.id(a.inverse(x));
    }
  }
  s.zero = a.id(a.zero());
  s.window = s.universe;
  return s;
}

RelationalStructure dense_order_structure(std::size_t n, const RelationalStructure& block) {
  check_structure(block);
  if (n == 0) throw BadParams("need at least one copy");
  if (std::find(block.labels.begin(), block.labels.end(), "-1") != block.labels.end())
    throw BadParams("block already uses the label -1");
  const std::size_t k = block.universe.size();
  std::unordered_map<Element, std::size_t> at;
  for (std::size_t j = 0; j < k; ++j) at.emplace(block.universe[j], j);
  auto elem = [&](std::size_t i, Element x) { return static_cast<Element>(i * k + at.at(x)); };

  RelationalStructure s;
  for (std::size_t i = 0; i < n * k; ++i) s.universe.push_back(static_cast<Element>(i));
  s.labels.push_back("-1");
  s.relations.emplace_back();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (auto x : block.universe)
        for (auto y : block.universe) s.relations[0].emplace_back(elem(i, x), elem(j, y));
  for (std::size_t l = 0; l < block.labels.size(); ++l) {
    s.labels.push_back(block.labels[l]);
    s.relations.emplace_back();
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [x, y] : block.relations[l]) s.relations.back().emplace_back(elem(i, x), elem(i, y));
  }
  s.signs = block.signs;
  s.signs["-1"] = Sign::negative;
  s.inverses = block.inverses;
  s.zero = block.zero;
  const std::size_t margin = std::min<std::size_t>(3, (n - 1) / 2);
  for (std::size_t i = margin; i + margin < n; ++i)
    for (auto x : block.window) s.window.push_back(elem(i, x));
  return s;
}

RelationalStructure dense_order_structure(std::size_t n, const CayleyTable& g) {
  return dense_order_structure(n, cayley_structure(g));
}

RelationalStructure successor_structure(std::size_t n, std::size_t max_shift) {
  if (max_shift == 0) throw BadParams("successor needs max_shift >= 1");
  RelationalStructure s;
  s.universe = centered(n);
  s.window = inner(s.universe, 2 * max_shift);
  if (s.window.empty()) throw BadParams("line too short for max_shift " + std::to_string(max_shift));
  auto id = [](long k) {
    if (k == 0) return std::string("0");
    return k > 0 ? "s+" + std::to_string(k) : "s-" + std::to_string(-k);
  };
  const long m = static_cast<long>(max_shift);
  std::vector<long> shifts{0};
  for (long k = 1; k <= m; ++k) {
    shifts.push_back(k);
    shifts.push_back(-k);
  }
  std::set<Element> elems(s.universe.begin(), s.universe.end());
  for (long k : shifts) {
    s.labels.push_back(id(k));
    s.relations.emplace_back();
    for (auto a : s.universe)
      if (elems.count(a + k)) s.relations.back().emplace_back(a, a + k);
    if (k != 0) {
      s.signs[id(k)] = Sign::positive;
      s.inverses[id(k)] = id(-k);
    }
  }
  return s;
}

RelationalStructure orbital_structure(std::size_t m,
                                      const std::vector<std::vector<std::size_t>>& gens) {
  if (m == 0) throw BadParams("empty point set");
  for (const auto& g : gens) {
    if (g.size() != m) throw BadParams("generator has the wrong degree");
    std::vector<bool> hit(m, false);
    for (auto x : g) {
      if (x >= m || hit[x]) throw BadParams("generator is not a permutation");
      hit[x] = true;
    }
  }
  // orbits of the generated group on ordered pairs
  std::vector<int> orbit(m * m, -1);
  int count = 0;
  for (std::size_t start = 0; start < m * m; ++start) {
    if (orbit[start] >= 0) continue;
    std::deque<std::size_t> todo{start};
    orbit[start] = count;
    while (!todo.empty()) {
      const std::size_t p = todo.front();
      todo.pop_front();
      for (const auto& g : gens) {
        const std::size_t q = g[p / m] * m + g[p % m];
        if (orbit[q] < 0) {
          orbit[q] = count;
          todo.push_back(q);
        }
      }
    }
    ++count;
  }
  for (std::size_t x = 1; x < m; ++x)
    if (orbit[x * m + x] != orbit[0]) throw BadParams("group is not transitive");
  RelationalStructure s;
  for (std::size_t i = 0; i < m; ++i) s.universe.push_back(static_cast<Element>(i));
  s.relations.resize(static_cast<std::size_t>(count));
  for (std::size_t p = 0; p < m * m; ++p)
    s.relations[static_cast<std::size_t>(orbit[p])].emplace_back(static_cast<Element>(p / m),
                                                                   static_cast<Element>(p % m));
  for (int o = 0; o < count; ++o) s.labels.push_back(o == 0 ? "0" : "r" + std::to_string(o));
  s.window = s.universe;
  return s;
}

RelationalStructure generate_structure(std::string_view kind, const StructureParams& p) {
  if (kind == "chain") return chain_structure(p.n);
  if (kind == "path") return path_structure(p.n, p.max_label);
  if (kind == "tree") return tree_structure(p.degree, p.radius, p.max_label);
  if (kind == "cayley") return cayley_structure(p.group);
  if (kind == "thm52") return dense_order_structure(p.n, p.group);
  if (kind == "successor") return successor_structure(p.n, p.max_label);
  throw BadParams("unknown structure kind '" + std::string(kind) + "'");
}

std::vector<CellDiff> oracle_vs_table(const RelationalStructure& s, const MultiTable& expected) {
  return compare_tables(expected, derive_table(s).to_table());
}

std::vector<DerivationNote> distance_notes(const DerivedTable& d) {
  const auto& a = d.alphabet;
  std::map<long, LabelIndex> numeric;
  for (LabelIndex i = 0; i < a.size(); ++i) {
    const std::string& id = a.id(i);
    if (id.empty() || id.find_first_not_of("0123456789") != std::string::npos) continue;
    // distances are symmetric, so every label is its own inverse
    if (!a.has_inverse(i) || a.inverse(i) != i) return {};
    numeric.emplace(std::stol(id), i);
  }
  std::vector<DerivationNote> notes;
  for (const auto& [m, u] : numeric) {
    for (const auto& [n, v] : numeric) {
      if (!numeric.count(m + n)) continue;
      const DerivedCell& c = d.cell(u, v);
      if (c.status != DerivedStatus::complete) continue;
      LabelSet expect = a.empty_set();
      expect.insert(numeric.at(m + n));
      expect.insert(numeric.at(std::labs(m - n)));
      if (c.labels == expect) continue;
      const bool superset = expect.is_subset_of(c.labels);
      notes.push_back({superset ? "distance-superset" : "distance-mismatch", a.id(u), a.id(v),
                       a.ids_of(c.labels), a.ids_of(expect)});
    }
  }
  return notes;
}

}  // namespace isolab
