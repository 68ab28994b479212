#include "isolab/analysis.hpp"

#include <functional>

#include "isolab/errors.hpp"

namespace isolab {

LabelSet deterministic_core(const MultiTable& t) { return deterministic_labels(t); }

LabelSet almost_deterministic_closure(const MultiTable& t) {
  const auto& a = t.alphabet();
  LabelSet s = deterministic_core(t);
  bool changed = true;
  while (changed) {
    changed = false;
    for (LabelIndex u = 0; u < a.size(); ++u) {
      if (a.is_negative(u) || s.contains(u)) continue;
      const LabelIndex inv = a.inverse(u);
      const Cell& l = t.cell(u, inv);
      const Cell& r = t.cell(inv, u);
      // an out-of-window member can never be inside s
      if (l.infinite || r.infinite || l.exceeds_window || r.exceeds_window) continue;
      if ((l.labels | r.labels).is_subset_of(s)) {
        s.insert(u);
        s.insert(inv);
        changed = true;
      }
    }
  }
  return s;
}

RelationClass classify_relation(const MultiTable& t) {
  const auto& a = t.alphabet();
  RelationClass c;
  c.transitive = !t.has_infinite_cells();
  bool any_pos = false, any_neg = false;
  for (LabelIndex u = 0; u < a.size(); ++u) {
    any_pos |= a.is_positive(u);
    any_neg |= a.is_negative(u);
  }
  c.partial_order = c.transitive && !any_pos;
  c.equivalence = c.transitive && !any_neg;
  return c;
}

std::string_view to_string(SopWitness::Kind k) {
  return k == SopWitness::Kind::direct_closure ? "direct-closure" : "power-closure";
}

namespace {

bool direct_closure_holds(const MultiTable& t, LabelIndex u, const LabelSet& x) {
  if (!x.contains(u) || !t.alphabet().is_negative(u)) return false;
  LabelSet x0 = x;
  x0.insert(t.alphabet().zero());
  auto p = try_set_product(t, t.alphabet().singleton(u), x0);
  return p && p->is_subset_of(x0);
}

// Least n <= max_power with X^{n+1} inside the union of the lower powers.
// nullopt when none, and `undecided` set when the window cut the search.
std::optional<std::size_t> power_closure(const MultiTable& t, const LabelSet& x,
                                         std::size_t max_power, bool& undecided) {
  LabelSet power = x;
  LabelSet lower = x;
  for (std::size_t n = 1; n <= max_power; ++n) {
    auto next = try_set_product(t, power, x);
    if (!next) {
      undecided = true;
      return std::nullopt;
    }
    if (next->is_subset_of(lower)) return n;
    power = *next;
    lower |= power;
  }
  return std::nullopt;
}

// Calls f on each subset of `pool` of the given size, in lexicographic order
// of declared positions, until f returns true.
bool for_each_subset(const std::vector<LabelIndex>& pool, std::size_t size, std::size_t universe,
                     const std::function<bool(const LabelSet&)>& f) {
  if (size > pool.size()) return false;
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    LabelSet s(universe);
    for (auto i : pick) s.insert(pool[i]);
    if (f(s)) return true;
    std::size_t k = size;
    while (k > 0 && pick[k - 1] == pool.size() - size + k - 1) --k;
    if (k == 0) return false;
    ++pick[k - 1];
    for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::optional<SopWitness> sop_detect(const MultiTable& t, const SopOptions& opts) {
  const auto& a = t.alphabet();
  const LabelSet neg = a.negatives();
  bool undecided = false;

  if (t.negatives_finite() && !neg.empty()) {
    if (neg.size() > 1) {
      if (auto n = power_closure(t, neg, opts.max_power, undecided))
        return SopWitness{SopWitness::Kind::power_closure, 0, neg, *n};
    }
    for (auto u : neg)
      if (direct_closure_holds(t, u, neg))
        return SopWitness{SopWitness::Kind::direct_closure, u, neg, 0};
  }

  const std::vector<LabelIndex> pool = neg.members();
  std::optional<SopWitness> found;
  for (std::size_t size = 1; size <= opts.max_subset && !found; ++size) {
    for_each_subset(pool, size, a.size(), [&](const LabelSet& x) {
      if (auto n = power_closure(t, x, opts.max_power, undecided)) {
        found = SopWitness{SopWitness::Kind::power_closure, 0, x, *n};
        return true;
      }
      return false;
    });
  }
  if (!found && undecided)
    throw WindowExceeded("no witness found and some candidates leave the window");
  return found;
}

bool sop_witness_holds(const MultiTable& t, const SopWitness& w) {
  if (w.x.empty() || !w.x.is_subset_of(t.alphabet().negatives())) return false;
  if (w.kind == SopWitness::Kind::direct_closure) return direct_closure_holds(t, w.u, w.x);
  if (w.n == 0) return false;
  // X^{n+1} against X ∪ ... ∪ X^n, recomputed from scratch
  LabelSet power = w.x;
  LabelSet lower = w.x;
  for (std::size_t k = 1; k < w.n; ++k) {
    auto next = try_set_product(t, power, w.x);
    if (!next) return false;
    power = *next;
    lower |= power;
  }
  auto top = try_set_product(t, power, w.x);
  return top && top->is_subset_of(lower);
}

LabelSet pip_elements(const MultiTable& t) {
  const auto& a = t.alphabet();
  LabelSet out(a.size());
  for (LabelIndex u = 0; u < a.size(); ++u) {
    if (!a.is_negative(u)) continue;
    bool all = true;
    for (LabelIndex v = 0; v < a.size() && all; ++v) all = t.cell(u, v).labels.contains(u);
    if (all) out.insert(u);
  }
  return out;
}

namespace {

struct SpecialSearch {
  const MultiTable& t;
  std::vector<LabelIndex> negs;
  std::vector<LabelIndex> nonnegs;
  std::size_t max_word;
  SpecialResult result;
  std::vector<LabelIndex> word;

  // prefix: u1·...·uk; from_left[i]: nonnegs[i]·u1·...·uk
  bool visit(const LabelSet& prefix, const std::vector<LabelSet>& from_left) {
    ++result.words_checked;
    LabelSet reached(t.size());
    for (const auto& s : from_left) reached |= s;
    for (auto v : nonnegs) {
      const LabelSet right = set_product(t, prefix, t.alphabet().singleton(v));
      const LabelSet missing = right.minus(reached);
      if (!missing.empty()) {
        result.passed = false;
        result.witness = SpecialWitness{word, v, *missing.begin()};
        return false;
      }
    }
    if (word.size() == max_word) return true;
    for (auto u : negs) {
      const LabelSet su = t.alphabet().singleton(u);
      std::vector<LabelSet> next;
      next.reserve(from_left.size());
      for (const auto& s : from_left) next.push_back(set_product(t, s, su));
      word.push_back(u);
      bool ok = visit(set_product(t, prefix, su), next);
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

SpecialResult special_check(const MultiTable& t, std::size_t max_word) {
  const auto& a = t.alphabet();
  const LabelSet neg = a.negatives();
  if (neg.empty()) throw EmptyNegativePart("special_check needs a negative label");
  if (max_word == 0) throw BadParams("max_word must be at least 1");
  SpecialSearch s{t, neg.members(), a.nonnegatives().members(), max_word, {}, {}};
  for (auto u : s.negs) {
    const LabelSet su = a.singleton(u);
    std::vector<LabelSet> from_left;
    for (auto v : s.nonnegs) from_left.push_back(t.product(v, u));
    s.word = {u};
    if (!s.visit(su, from_left)) break;
  }
  return s.result;
}

std::string_view to_string(PowerfulResult::Approx a) {
  switch (a) {
    case PowerfulResult::Approx::holds:
      return "holds";
    case PowerfulResult::Approx::violated:
      return "violated";
    case PowerfulResult::Approx::not_applicable:
      return "not-applicable";
  }
  return "?";
}

PowerfulResult powerful_graph_check(const MultiTable& t, const LabelSet& gens,
                                    std::size_t max_word) {
  const auto& a = t.alphabet();
  if (gens.universe() != a.size()) throw UnknownLabel("generators belong to another alphabet");
  if (gens.empty()) throw EmptyLabelSet("no generators");
  PowerfulResult r;
  const LabelIndex z = a.zero();

  // (2): words over the generators never contain 0. The union of all such
  // words is the least superset of gens closed under right multiplication.
  LabelSet reach = gens;
  while (!reach.contains(z)) {
    auto next = try_set_product(t, reach, gens);
    if (!next)
      throw WindowExceeded("generator words leave the window before deciding condition (2)");
    if (next->is_subset_of(reach)) break;
    reach |= *next;
  }
  if (reach.contains(z)) {
    r.no_zero_in_words = false;
    // shortest offending word, for the witness
    std::vector<std::vector<LabelIndex>> layer;
    for (auto g : gens) layer.push_back({g});
    while (r.witness.empty()) {
      std::vector<std::vector<LabelIndex>> next;
      for (auto& w : layer) {
        if (word_product(t, w).contains(z)) {
          r.witness = w;
          break;
        }
        for (auto g : gens) {
          auto w2 = w;
          w2.push_back(g);
          next.push_back(std::move(w2));
        }
      }
      layer = std::move(next);
    }
    r.detail = "a word over the generators multiplies to a set containing 0";
  }

  // (3): u_i·v meets the generators for every v
  for (auto g : gens) {
    if (!r.generators_meet) break;
    for (LabelIndex v = 0; v < a.size(); ++v) {
      if (!t.cell(g, v).labels.intersects(gens)) {
        r.generators_meet = false;
        if (r.no_zero_in_words) {
          r.witness = {g, v};
          r.detail = a.id(g) + "·" + a.id(v) + " misses the generators";
        }
        break;
      }
    }
  }
  r.passed = r.no_zero_in_words && r.generators_meet;

  bool invertible = true;
  for (auto g : gens) invertible &= !a.is_negative(g);
  if (!invertible) {
    r.acl_approx = PowerfulResult::Approx::not_applicable;
    r.acl_detail = "a generator is negative and has no inverse";
    return r;
  }
  LabelSet ad = almost_deterministic_closure(t);
  ad.erase(z);
  const LabelSet inv = set_inverse(t, gens);
  LabelSet power = inv;
  r.acl_approx = PowerfulResult::Approx::holds;
  r.acl_detail = "checked inverse words up to length " + std::to_string(max_word);
  for (std::size_t k = 1; k <= max_word; ++k) {
    if (power.intersects(ad)) {
      r.acl_approx = PowerfulResult::Approx::violated;
      r.acl_detail = "an inverse word of length " + std::to_string(k) + " meets " +
                     format_set(a, power & ad);
      break;
    }
    if (k == max_word) break;
    auto next = try_set_product(t, power, inv);
    if (!next) {
      r.acl_detail = "inverse words leave the window after length " + std::to_string(k);
      break;
    }
    power = *next;
  }
  return r;
}

}  // namespace isolab
