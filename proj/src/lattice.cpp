#include <algorithm>
#include <sstream>

#include "isolab/analysis.hpp"
#include "isolab/errors.hpp"

namespace isolab {

std::size_t RestrictionLattice::node(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return i;
  throw Error("no lattice node '" + std::string(id) + "'");
}

bool RestrictionLattice::includes(std::size_t lower, std::size_t upper) const {
  return nodes.at(lower).labels.is_subset_of(nodes.at(upper).labels);
}

namespace {

void require_closed(const MultiTable& t, const LatticeNode& n, std::size_t& undecided) {
  const auto& a = t.alphabet();
  for (auto u : n.labels) {
    if (a.has_inverse(u) && !n.labels.contains(a.inverse(u)))
      throw ClosureViolation(n.name + " is not closed under inverse: " + a.id(u));
    for (auto v : n.labels) {
      const Cell& c = t.cell(u, v);
      if (!c.labels.is_subset_of(n.labels))
        throw ClosureViolation(n.name + " is not closed under " + a.id(u) + "·" + a.id(v) +
                               " = " + format_set(a, c.labels));
      if (c.exceeds_window) ++undecided;
    }
  }
}

}  // namespace

RestrictionLattice restriction_lattice(const MultiTable& t) {
  const auto& a = t.alphabet();
  const LabelSet full = a.all();
  const LabelSet le0 = a.nonpositives();
  const LabelSet ge0 = a.nonnegatives();
  const LabelSet d = deterministic_core(t);
  const LabelSet ad = almost_deterministic_closure(t);
  LabelSet g(a.size());
  for (auto u : d)
    if (d.contains(a.inverse(u))) g.insert(u);
  const LabelSet zero = a.singleton(a.zero());

  RestrictionLattice l;
  l.nodes = {
      {"full", "P", full},
      {"le0", "P≤0", le0},
      {"ge0", "P≥0", ge0},
      {"d", "P_d", d},
      {"ad", "P_ad", ad},
      {"le0_d", "P≤0_d", le0 & d},
      {"ge0_d", "P≥0_d", ge0 & d},
      {"le0_ad", "P≤0_ad", le0 & ad},
      {"ge0_ad", "P≥0_ad", ge0 & ad},
      {"G", "G", g},
      {"zero", "{0}", zero},
  };
  const std::pair<const char*, const char*> edges[] = {
      {"le0_d", "le0_ad"}, {"le0_ad", "le0"},  {"le0", "full"},  {"ge0_d", "ge0_ad"},
      {"ge0_ad", "ge0"},   {"ge0", "full"},    {"zero", "d"},    {"d", "ad"},
      {"le0_d", "d"},      {"ge0_d", "d"},     {"ad", "full"},   {"le0_ad", "ad"},
      {"ge0_ad", "ad"},    {"zero", "le0_d"},  {"G", "ge0_d"},   {"zero", "G"},
  };
  for (auto [lo, hi] : edges) l.structural.emplace_back(l.node(lo), l.node(hi));

  for (const auto& n : l.nodes) require_closed(t, n, l.undecided_products);

  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    auto it = std::find_if(l.classes.begin(), l.classes.end(), [&](const auto& c) {
      return l.nodes[c.front()].labels == l.nodes[i].labels;
    });
    if (it == l.classes.end())
      l.classes.push_back({i});
    else
      it->push_back(i);
  }
  const std::size_t k = l.classes.size();
  auto below = [&](std::size_t x, std::size_t y) {
    const auto& sx = l.nodes[l.classes[x].front()].labels;
    const auto& sy = l.nodes[l.classes[y].front()].labels;
    return x != y && sx.is_subset_of(sy);
  };
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (!below(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < k && covered; ++z) covered = !(below(x, z) && below(z, y));
      if (covered) l.hasse.emplace_back(x, y);
    }
  }
  return l;
}

std::string lattice_to_dot(const MultiTable& t, const RestrictionLattice& l) {
  std::ostringstream out;
  out << "digraph restriction_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < l.classes.size(); ++c) {
    std::string names;
    for (auto i : l.classes[c]) names += (names.empty() ? "" : " = ") + l.nodes[i].name;
    const auto& set = l.nodes[l.classes[c].front()].labels;
    out << "  c" << c << " [label=\"" << names << "\\n" << format_set(t.alphabet(), set)
        << "\"];\n";
  }
  for (auto [lo, hi] : l.hasse) out << "  c" << lo << " -> c" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace isolab
