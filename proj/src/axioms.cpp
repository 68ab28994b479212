#include "isolab/axioms.hpp"

#include <algorithm>

#include "isolab/errors.hpp"

namespace isolab {

const std::vector<AxiomInfo>& axiom_catalogue() {
  static const std::vector<AxiomInfo> catalogue{
      {Axiom::unit, "A1-unit", 1, "0·u = u·0 = {u}"},
      {Axiom::neg_absorption, "A2-neg-absorption", 2, "u < 0 implies u·v, v·u ⊆ U⁻"},
      {Axiom::pos_closure, "A3-pos-closure", 2, "u, v > 0 implies u·v ⊆ U≥0"},
      {Axiom::inverse, "A4-inverse", 1,
       "u > 0 has exactly one positive inverse, and 0 ∈ u·u⁻¹ ∩ u⁻¹·u"},
      {Axiom::anti_hom, "A5-anti-hom", 2, "u > 0, v1, v2 ≥ 0 and u ∈ v1·v2 imply u⁻¹ ∈ v2⁻¹·v1⁻¹"},
      {Axiom::semi_assoc, "A6-semi-assoc", 3, "(u1·u2)·u3 ⊇ u1·(u2·u3)"},
      {Axiom::strictness, "A7-strictness", 3,
       "(u1·u2)·u3 ⊆ u1·(u2·u3) unless u1 < 0 and u2·u3 is infinite"},
      {Axiom::determinism, "A8-determinism", 2, "u, v deterministic implies |u·v| = 1"},
  };
  return catalogue;
}

const AxiomInfo& axiom_info(Axiom a) {
  for (const auto& i : axiom_catalogue())
    if (i.axiom == a) return i;
  throw Error("unknown axiom");
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped_window:
      return "skipped-window";
  }
  return "?";
}

std::string_view to_string(AssocRelation r) {
  switch (r) {
    case AssocRelation::equal:
      return "equal";
    case AssocRelation::strict_left_inclusion:
      return "strict-left-inclusion";
    case AssocRelation::violation:
      return "violation";
    case AssocRelation::skipped:
      return "skipped";
  }
  return "?";
}

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

CheckStatus ValidationReport::overall() const {
  CheckStatus s = CheckStatus::pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return CheckStatus::fail;
    if (c.status == CheckStatus::skipped_window) s = CheckStatus::skipped_window;
  }
  return s;
}

const CheckResult& ValidationReport::check(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw Error("no check '" + std::string(id) + "' in report");
}

LabelSet deterministic_labels(const MultiTable& t) {
  const auto& a = t.alphabet();
  LabelSet out(a.size());
  const LabelSet zero = a.singleton(a.zero());
  for (LabelIndex u = 0; u < a.size(); ++u) {
    if (a.is_negative(u)) continue;
    const Cell& c = t.cell(a.inverse(u), u);
    if (!c.infinite && !c.exceeds_window && c.labels == zero) out.insert(u);
  }
  return out;
}

namespace {

using Outcome = InstanceOutcome;

// (u1·u2)·u3 and u1·(u2·u3), or nullopt when a value leaves the window.
struct Brackets {
  LabelSet left;
  LabelSet right;
};

std::optional<Brackets> brackets(const MultiTable& t, LabelIndex u1, LabelIndex u2,
                                 LabelIndex u3) {
  const Cell& c12 = t.cell(u1, u2);
  const Cell& c23 = t.cell(u2, u3);
  if (c12.exceeds_window || c23.exceeds_window) return std::nullopt;
  Brackets b{LabelSet(t.size()), LabelSet(t.size())};
  for (auto w : c12.labels) {
    const Cell& c = t.cell(w, u3);
    if (c.exceeds_window) return std::nullopt;
    b.left |= c.labels;
  }
  for (auto w : c23.labels) {
    const Cell& c = t.cell(u1, w);
    if (c.exceeds_window) return std::nullopt;
    b.right |= c.labels;
  }
  return b;
}

std::string cell_name(const SignedAlphabet& a, LabelIndex u, LabelIndex v) {
  return a.id(u) + "·" + a.id(v);
}

Outcome check_unit(const MultiTable& t, LabelIndex u, Witness* w) {
  const auto& a = t.alphabet();
  const LabelIndex z = a.zero();
  const LabelSet expect = a.singleton(u);
  for (auto [x, y] : {std::pair{z, u}, std::pair{u, z}}) {
    const Cell& c = t.cell(x, y);
    if (c.labels != expect || c.exceeds_window || c.infinite) {
      if (w) {
        w->sets.push_back({cell_name(a, x, y), c.labels});
        w->detail = cell_name(a, x, y) + " is not {" + a.id(u) + "}";
      }
      return Outcome::violated;
    }
  }
  return Outcome::holds;
}

Outcome check_neg_absorption(const MultiTable& t, LabelIndex u, LabelIndex v, Witness* w) {
  const auto& a = t.alphabet();
  if (!a.is_negative(u)) return Outcome::not_applicable;
  const LabelSet neg = a.negatives();
  bool undecided = false;
  for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
    const Cell& c = t.cell(x, y);
    if (!c.labels.is_subset_of(neg)) {
      if (w) {
        w->sets.push_back({cell_name(a, x, y), c.labels});
        w->detail = cell_name(a, x, y) + " has a non-negative member";
      }
      return Outcome::violated;
    }
    undecided |= c.exceeds_window;
  }
  return undecided ? Outcome::skipped : Outcome::holds;
}

Outcome check_pos_closure(const MultiTable& t, LabelIndex u, LabelIndex v, Witness* w) {
  const auto& a = t.alphabet();
  if (!a.is_positive(u) || !a.is_positive(v)) return Outcome::not_applicable;
  const Cell& c = t.cell(u, v);
  if (c.labels.intersects(a.negatives())) {
    if (w) {
      w->sets.push_back({cell_name(a, u, v), c.labels});
      w->detail = cell_name(a, u, v) + " has a negative member";
    }
    return Outcome::violated;
  }
  return c.exceeds_window ? Outcome::skipped : Outcome::holds;
}

Outcome check_inverse(const MultiTable& t, LabelIndex u, Witness* w) {
  const auto& a = t.alphabet();
  if (!a.is_positive(u)) return Outcome::not_applicable;
  const LabelIndex z = a.zero();
  const LabelIndex inv = a.inverse(u);
  const Cell& l = t.cell(u, inv);
  const Cell& r = t.cell(inv, u);
  if (!l.labels.contains(z) || !r.labels.contains(z)) {
    if (w) {
      w->sets.push_back({cell_name(a, u, inv), l.labels});
      if (inv != u) w->sets.push_back({cell_name(a, inv, u), r.labels});
      w->detail = "0 is missing from " + cell_name(a, u, inv) +
                  (inv != u ? " ∩ " + cell_name(a, inv, u) : std::string());
    }
    return Outcome::violated;
  }
  for (LabelIndex x = 0; x < a.size(); ++x) {
    if (x == inv || !a.is_positive(x)) continue;
    if (t.cell(u, x).labels.contains(z) && t.cell(x, u).labels.contains(z)) {
      if (w) {
        w->sets.push_back({cell_name(a, u, x), t.cell(u, x).labels});
        w->sets.push_back({cell_name(a, x, u), t.cell(x, u).labels});
        w->detail = a.id(x) + " is a second inverse of " + a.id(u);
      }
      return Outcome::violated;
    }
  }
  return Outcome::holds;
}

Outcome check_anti_hom(const MultiTable& t, LabelIndex v1, LabelIndex v2, Witness* w) {
  const auto& a = t.alphabet();
  if (a.is_negative(v1) || a.is_negative(v2)) return Outcome::not_applicable;
  const Cell& c = t.cell(v1, v2);
  const LabelSet hyp = c.labels & a.positives();
  if (hyp.empty() && !c.exceeds_window) return Outcome::not_applicable;
  const Cell& rev = t.cell(a.inverse(v2), a.inverse(v1));
  for (auto u : hyp) {
    if (!rev.labels.contains(a.inverse(u))) {
      if (w) {
        w->sets.push_back({cell_name(a, v1, v2), c.labels});
        w->sets.push_back({cell_name(a, a.inverse(v2), a.inverse(v1)), rev.labels});
        w->detail = a.id(a.inverse(u)) + " ∉ " + cell_name(a, a.inverse(v2), a.inverse(v1));
      }
      return Outcome::violated;
    }
  }
  return c.exceeds_window ? Outcome::skipped : Outcome::holds;
}

Outcome check_assoc(const MultiTable& t, Axiom ax, LabelIndex u1, LabelIndex u2, LabelIndex u3,
                    Witness* w) {
  const auto& a = t.alphabet();
  auto b = brackets(t, u1, u2, u3);
  if (!b) return Outcome::skipped;
  bool ok;
  if (ax == Axiom::semi_assoc) {
    ok = b->right.is_subset_of(b->left);
  } else {
    ok = b->left.is_subset_of(b->right) || (a.is_negative(u1) && t.cell(u2, u3).infinite);
  }
  if (ok) return Outcome::holds;
  if (w) {
    w->sets.push_back({"(" + cell_name(a, u1, u2) + ")·" + a.id(u3), b->left});
    w->sets.push_back({a.id(u1) + "·(" + cell_name(a, u2, u3) + ")", b->right});
    if (ax == Axiom::semi_assoc) {
      w->detail = "right bracketing has " + format_set(a, b->right.minus(b->left)) +
                  " outside the left bracketing";
    } else {
      w->detail = "left bracketing has " + format_set(a, b->left.minus(b->right)) +
                  " outside the right bracketing";
      if (!a.is_negative(u1)) w->detail += "; u1 is not negative";
      if (!t.cell(u2, u3).infinite) w->detail += "; " + cell_name(a, u2, u3) + " is finite";
    }
  }
  return Outcome::violated;
}

Outcome check_determinism(const MultiTable& t, const LabelSet& core, LabelIndex u, LabelIndex v,
                          Witness* w) {
  if (!core.contains(u) || !core.contains(v)) return Outcome::not_applicable;
  const Cell& c = t.cell(u, v);
  const std::size_t n = c.labels.size();
  bool bad = c.infinite || n > 1 || (n == 1 && c.exceeds_window);
  if (bad) {
    if (w) {
      w->sets.push_back({cell_name(t.alphabet(), u, v), c.labels});
      w->detail = cell_name(t.alphabet(), u, v) + " is not a singleton";
    }
    return Outcome::violated;
  }
  return c.exceeds_window ? Outcome::skipped : Outcome::holds;
}

Outcome evaluate(const MultiTable& t, const LabelSet& core, Axiom ax,
                 std::span<const LabelIndex> x, Witness* w) {
  switch (ax) {
    case Axiom::unit:
      return check_unit(t, x[0], w);
    case Axiom::neg_absorption:
      return check_neg_absorption(t, x[0], x[1], w);
    case Axiom::pos_closure:
      return check_pos_closure(t, x[0], x[1], w);
    case Axiom::inverse:
      return check_inverse(t, x[0], w);
    case Axiom::anti_hom:
      return check_anti_hom(t, x[0], x[1], w);
    case Axiom::semi_assoc:
    case Axiom::strictness:
      return check_assoc(t, ax, x[0], x[1], x[2], w);
    case Axiom::determinism:
      return check_determinism(t, core, x[0], x[1], w);
  }
  return Outcome::not_applicable;
}

CheckResult scan(const MultiTable& t, const LabelSet& core, const AxiomInfo& info) {
  CheckResult r;
  r.id = info.id;
  r.description = info.description;
  const std::size_t n = t.size();
  std::vector<LabelIndex> tuple(info.arity, 0);
  bool done = n == 0;
  while (!done) {
    Outcome o = evaluate(t, core, info.axiom, tuple, nullptr);
    if (o != Outcome::not_applicable) ++r.instances;
    if (o == Outcome::skipped) ++r.skipped;
    if (o == Outcome::violated) {
      Witness w{tuple, {}, {}};
      evaluate(t, core, info.axiom, tuple, &w);
      r.status = CheckStatus::fail;
      r.witness = std::move(w);
      break;
    }
    // advance the odometer, last position fastest
    std::size_t k = tuple.size();
    while (k > 0) {
      if (++tuple[k - 1] < n) break;
      tuple[k - 1] = 0;
      --k;
    }
    done = k == 0;
  }
  if (r.status != CheckStatus::fail && r.skipped > 0) r.status = CheckStatus::skipped_window;
  r.vacuous = r.status == CheckStatus::pass && r.instances == 0;
  return r;
}

}  // namespace

InstanceOutcome evaluate_instance(const MultiTable& t, Axiom a, std::span<const LabelIndex> tuple,
                                  Witness* w) {
  if (tuple.size() < axiom_info(a).arity) throw Error("instance tuple too short");
  for (auto u : tuple)
    if (u >= t.size()) throw UnknownLabel("label index out of range");
  const LabelSet core = a == Axiom::determinism ? deterministic_labels(t) : LabelSet(t.size());
  return evaluate(t, core, a, tuple.first(axiom_info(a).arity), w);
}

ValidationReport validate_i_groupoid(const MultiTable& t) {
  ValidationReport rep;
  const LabelSet core = deterministic_labels(t);
  for (const auto& info : axiom_catalogue()) rep.checks.push_back(scan(t, core, info));
  rep.pairs_checked = t.size() * t.size();
  rep.triples_checked = rep.pairs_checked * t.size();
  return rep;
}

AssociativityProfile associativity_profile(const MultiTable& t) {
  AssociativityProfile p;
  const auto& a = t.alphabet();
  const std::size_t n = t.size();
  p.entries.reserve(n * n * n);
  for (LabelIndex u1 = 0; u1 < n; ++u1) {
    for (LabelIndex u2 = 0; u2 < n; ++u2) {
      for (LabelIndex u3 = 0; u3 < n; ++u3) {
        auto b = brackets(t, u1, u2, u3);
        AssocRelation r;
        if (!b) {
          r = AssocRelation::skipped;
          ++p.skipped;
        } else if (b->left == b->right) {
          r = AssocRelation::equal;
          ++p.equal;
        } else if (b->right.is_subset_of(b->left)) {
          r = AssocRelation::strict_left_inclusion;
          ++p.strict;
        } else {
          r = AssocRelation::violation;
          ++p.violations;
        }
        if (!a.is_negative(u1) && r != AssocRelation::equal && r != AssocRelation::skipped)
          p.nonnegative_associativity = false;
        p.entries.push_back({u1, u2, u3, r});
      }
    }
  }
  return p;
}

SignLemmaResult sign_lemma_check(const MultiTable& t, const std::vector<LabelIndex>& word) {
  const auto& a = t.alphabet();
  SignLemmaResult r;
  r.product = word_product(t, word);
  const bool has_negative =
      std::any_of(word.begin(), word.end(), [&](LabelIndex u) { return a.is_negative(u); });
  if (has_negative) {
    if (!r.product.is_subset_of(a.negatives())) {
      r.passed = false;
      r.detail = "word with a negative letter has non-negative members in its product";
    }
    return r;
  }
  if (!r.product.is_subset_of(a.nonnegatives())) {
    r.passed = false;
    r.detail = "non-negative word has negative members in its product";
    return r;
  }
  std::vector<LabelIndex> rev;
  for (auto it = word.rbegin(); it != word.rend(); ++it) rev.push_back(a.inverse(*it));
  const LabelSet expect = word_product(t, rev);
  const LabelSet got = set_inverse(t, r.product);
  if (got != expect) {
    r.passed = false;
    r.detail = "inverse of the product is " + format_set(a, got) +
               " but the reversed inverse word gives " + format_set(a, expect);
  }
  return r;
}

}  // namespace isolab
