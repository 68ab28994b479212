#include "isolab/constructions.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "isolab/errors.hpp"

namespace isolab {

namespace {

std::string power_name(const std::string& base, std::size_t k) {
  if (k == 0) return "0";
  return k == 1 ? base : base + std::to_string(k);
}

}  // namespace

CayleyTable cyclic_group(std::size_t n) {
  if (n == 0) throw BadParams("cyclic group of order 0");
  CayleyTable g;
  for (std::size_t i = 0; i < n; ++i) g.elements.push_back(power_name("g", i));
  for (std::size_t i = 0; i < n; ++i) {
    g.rows.emplace_back();
    for (std::size_t j = 0; j < n; ++j) g.rows.back().push_back(g.elements[(i + j) % n]);
  }
  return g;
}

CayleyTable klein_four_group() {
  CayleyTable g;
  g.elements = {"0", "a", "b", "c"};
  // bitwise xor on 0=00, a=01, b=10, c=11
  for (std::size_t i = 0; i < 4; ++i) {
    g.rows.emplace_back();
    for (std::size_t j = 0; j < 4; ++j) g.rows.back().push_back(g.elements[i ^ j]);
  }
  return g;
}

CayleyTable dihedral_group(std::size_t n) {
  if (n < 2) throw BadParams("dihedral group needs n >= 2");
  // element (f, i) is s^f r^i; r^i s^g = s^g r^{(-1)^g i}
  auto name = [&](std::size_t f, std::size_t i) {
    if (f == 0) return power_name("r", i);
    return i == 0 ? std::string("s") : "s" + power_name("r", i);
  };
  CayleyTable g;
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t i = 0; i < n; ++i) g.elements.push_back(name(f, i));
  for (std::size_t f = 0; f < 2; ++f) {
    for (std::size_t i = 0; i < n; ++i) {
      g.rows.emplace_back();
      for (std::size_t h = 0; h < 2; ++h) {
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t ri = h == 0 ? i : (n - i) % n;
          g.rows.back().push_back(name((f + h) % 2, (ri + j) % n));
        }
      }
    }
  }
  return g;
}

CayleyTable direct_product(const CayleyTable& g, const CayleyTable& h) {
  CayleyTable p;
  auto name = [](const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; };
  for (const auto& x : g.elements)
    for (const auto& y : h.elements) p.elements.push_back(name(x, y));
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (std::size_t k = 0; k < h.elements.size(); ++k) {
      p.rows.emplace_back();
      for (std::size_t j = 0; j < g.elements.size(); ++j)
        for (std::size_t l = 0; l < h.elements.size(); ++l)
          p.rows.back().push_back(name(g.rows[i][j], h.rows[k][l]));
    }
  }
  return p;
}

MultiTable group_table(const CayleyTable& g) {
  const std::size_t n = g.elements.size();
  if (n == 0) throw NotAGroup("no elements");
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i)
    if (!pos.emplace(g.elements[i], i).second)
      throw NotAGroup("duplicate element '" + g.elements[i] + "'");
  if (g.rows.size() != n) throw NotAGroup("table is not square");
  std::vector<std::size_t> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.rows[i].size() != n) throw NotAGroup("table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      auto it = pos.find(g.rows[i][j]);
      if (it == pos.end()) throw NotAGroup("product '" + g.rows[i][j] + "' is not an element");
      mul[i * n + j] = it->second;
    }
  }
  std::optional<std::size_t> e;
  for (std::size_t i = 0; i < n && !e; ++i) {
    bool unit = true;
    for (std::size_t j = 0; j < n && unit; ++j) unit = mul[i * n + j] == j && mul[j * n + i] == j;
    if (unit) e = i;
  }
  if (!e) throw NotAGroup("no identity element");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul[mul[i * n + j] * n + k] != mul[i * n + mul[j * n + k]])
          throw NotAGroup("not associative at (" + g.elements[i] + ", " + g.elements[j] + ", " +
                          g.elements[k] + ")");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mul[i * n + j] == *e && mul[j * n + i] == *e) inv[i] = j;
  for (std::size_t i = 0; i < n; ++i)
    if (inv[i] == n) throw NotAGroup("'" + g.elements[i] + "' has no inverse");

  std::vector<std::string> ids = g.elements;
  for (std::size_t i = 0; i < n; ++i)
    if (i != *e && ids[i] == "0") throw NotAGroup("non-identity element is named 0");
  ids[*e] = "0";
  std::vector<LabelDecl> decls;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == *e)
      decls.push_back({ids[i], Sign::zero, {}});
    else
      decls.push_back({ids[i], Sign::positive, ids[inv[i]]});
  }
  SignedAlphabet a(std::move(decls));
  TableBuilder b(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, a.singleton(mul[i * n + j]));
  return b.build();
}

MultiTable saturating_negative_monoid() {
  SignedAlphabet a({{"-1", Sign::negative, {}}, {"0", Sign::zero, {}}});
  TableBuilder b(a);
  b.unit_law();
  b.set("-1", "-1", {"-1"});
  return b.build();
}

bool is_monoid(const MultiTable& t, std::string* why) {
  const auto& a = t.alphabet();
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const std::size_t n = a.size();
  for (LabelIndex u = 0; u < n; ++u) {
    for (LabelIndex v = 0; v < n; ++v) {
      const Cell& c = t.cell(u, v);
      const std::size_t k = c.labels.size();
      if (c.infinite || k > 1 || (k == 1 && c.exceeds_window))
        return fail(a.id(u) + "·" + a.id(v) + " is not a single label");
    }
    const LabelSet self = a.singleton(u);
    if (t.cell(a.zero(), u).labels != self || t.cell(u, a.zero()).labels != self)
      return fail("0 is not a unit for " + a.id(u));
  }
  for (LabelIndex x = 0; x < n; ++x) {
    for (LabelIndex y = 0; y < n; ++y) {
      const Cell& xy = t.cell(x, y);
      if (xy.exceeds_window) continue;
      const LabelIndex p = *xy.labels.begin();
      for (LabelIndex z = 0; z < n; ++z) {
        const Cell& yz = t.cell(y, z);
        if (yz.exceeds_window) continue;
        const Cell& l = t.cell(p, z);
        const Cell& r = t.cell(x, *yz.labels.begin());
        if (l.exceeds_window || r.exceeds_window) continue;
        if (l.labels != r.labels)
          return fail("not associative at (" + a.id(x) + ", " + a.id(y) + ", " + a.id(z) + ")");
      }
    }
  }
  return true;
}

MultiTable band_compose(const MultiTable& neg, const MultiTable& pos) {
  const auto& na = neg.alphabet();
  const auto& pa = pos.alphabet();
  for (LabelIndex u = 0; u < na.size(); ++u)
    if (na.is_positive(u)) throw SignMismatch("negative side has positive label " + na.id(u));
  for (LabelIndex u = 0; u < pa.size(); ++u)
    if (pa.is_negative(u)) throw SignMismatch("positive side has negative label " + pa.id(u));
  if (na.id(na.zero()) != pa.id(pa.zero()))
    throw AlphabetOverlap("zero labels differ: " + na.id(na.zero()) + " vs " + pa.id(pa.zero()));
  for (LabelIndex u = 0; u < na.size(); ++u)
    if (u != na.zero() && pa.find(na.id(u)))
      throw AlphabetOverlap("label " + na.id(u) + " occurs on both sides");
  std::string why;
  if (!is_monoid(neg, &why)) throw NotAMonoid("negative side: " + why);
  if (!is_monoid(pos, &why)) throw NotAMonoid("positive side: " + why);
  // a unit among negative products breaks (u·v)·w = u·(v·w) for w > 0
  for (LabelIndex u = 0; u < na.size(); ++u)
    for (LabelIndex v = 0; v < na.size(); ++v)
      if (u != na.zero() && v != na.zero() && neg.cell(u, v).labels.contains(na.zero()))
        throw SignMismatch("negative side has " + na.id(u) + "·" + na.id(v) + " = " + na.id(na.zero()));

  std::vector<LabelDecl> decls;
  for (LabelIndex u = 0; u < na.size(); ++u)
    if (u != na.zero()) decls.push_back({na.id(u), na.sign(u), {}});
  decls.push_back({na.id(na.zero()), Sign::zero, {}});
  for (LabelIndex u = 0; u < pa.size(); ++u)
    if (u != pa.zero()) decls.push_back({pa.id(u), Sign::positive, pa.id(pa.inverse(u))});
  SignedAlphabet a(std::move(decls));

  auto lift = [&](const SignedAlphabet& from, const Cell& c) {
    Cell out{a.empty_set(), c.infinite, c.exceeds_window};
    for (auto w : c.labels) out.labels.insert(a.index(from.id(w)));
    return out;
  };
  TableBuilder b(a);
  for (LabelIndex u = 0; u < na.size(); ++u)
    for (LabelIndex v = 0; v < na.size(); ++v)
      b.set(a.index(na.id(u)), a.index(na.id(v)), lift(na, neg.cell(u, v)));
  for (LabelIndex u = 0; u < pa.size(); ++u)
    for (LabelIndex v = 0; v < pa.size(); ++v)
      b.set(a.index(pa.id(u)), a.index(pa.id(v)), lift(pa, pos.cell(u, v)));
  for (LabelIndex u = 0; u < na.size(); ++u) {
    if (u == na.zero()) continue;
    const LabelIndex x = a.index(na.id(u));
    for (LabelIndex v = 0; v < pa.size(); ++v) {
      if (v == pa.zero()) continue;
      const LabelIndex y = a.index(pa.id(v));
      b.set(x, y, a.singleton(x));
      b.set(y, x, a.singleton(x));
    }
  }

  std::shared_ptr<const RuleInfo> rule;
  if (neg.rule() || pos.rule()) {
    auto info = std::make_shared<RuleInfo>();
    info->name = "band(" + (neg.rule() ? neg.rule()->name : std::string("table")) + "," +
                 (pos.rule() ? pos.rule()->name : std::string("table")) + ")";
    info->window = neg.rule() ? neg.rule()->window : pos.rule()->window;
    info->negatives_finite = neg.negatives_finite();
    auto nr = neg.rule() ? neg.rule()->recognizes : std::function<bool(std::string_view)>{};
    auto pr = pos.rule() ? pos.rule()->recognizes : std::function<bool(std::string_view)>{};
    info->recognizes = [nr, pr](std::string_view id) {
      return (nr && nr(id)) || (pr && pr(id));
    };
    rule = std::move(info);
  }
  return b.build(std::move(rule));
}

}  // namespace isolab
