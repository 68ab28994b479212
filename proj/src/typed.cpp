#include "isolab/typed.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "isolab/errors.hpp"

namespace isolab {

TypedTable::TypedTable(std::vector<std::string> sorts, SignedAlphabet alphabet,
                       std::vector<LabelSet> mu, std::map<Key, TypedCell> products)
    : sorts_(std::move(sorts)),
      alphabet_(std::move(alphabet)),
      mu_(std::move(mu)),
      products_(std::move(products)) {
  const std::size_t k = sorts_.size();
  if (k == 0) throw RegularityViolation("no sorts");
  std::set<std::string> seen(sorts_.begin(), sorts_.end());
  if (seen.size() != k) throw RegularityViolation("duplicate sort name");
  if (mu_.size() != k * k) throw RegularityViolation("μ needs one set per pair of sorts");
  for (const auto& m : mu_)
    if (m.universe() != alphabet_.size()) throw UnknownLabel("μ-set over another alphabet");
  for (const auto& [key, cell] : products_) {
    auto [p, u, q, v, r] = key;
    if (p >= k || q >= k || r >= k) throw UnknownLabel("product refers to an unknown sort");
    if (!this->mu(p, q).contains(u) || !this->mu(q, r).contains(v))
      throw UnknownLabel("product (" + sorts_[p] + "," + alphabet_.id(u) + "," + sorts_[q] +
                         ")·(" + sorts_[q] + "," + alphabet_.id(v) + "," + sorts_[r] +
                         ") uses a label outside its μ-set");
    if (cell.labels.universe() != alphabet_.size())
      throw UnknownLabel("product value over another alphabet");
  }
  // products with a zero factor default to the unit law
  const LabelIndex z = alphabet_.zero();
  for (SortIndex p = 0; p < k; ++p) {
    for (SortIndex q = 0; q < k; ++q) {
      for (auto u : this->mu(p, q)) {
        if (this->mu(p, p).contains(z))
          products_.try_emplace(Key{p, z, p, u, q}, TypedCell{alphabet_.singleton(u)});
        if (this->mu(q, q).contains(z))
          products_.try_emplace(Key{p, u, q, z, q}, TypedCell{alphabet_.singleton(u)});
      }
    }
  }
  for (SortIndex p = 0; p < k; ++p)
    for (SortIndex q = 0; q < k; ++q)
      for (SortIndex r = 0; r < k; ++r)
        for (auto u : this->mu(p, q))
          for (auto v : this->mu(q, r))
            if (!products_.count(Key{p, u, q, v, r}))
              throw MissingProduct("no value for (" + sorts_[p] + "," + alphabet_.id(u) + "," + sorts_[q] +
                                   ")·(" + sorts_[q] + "," + alphabet_.id(v) + "," + sorts_[r] + ")");
}

SortIndex TypedTable::sort_index(std::string_view name) const {
  for (SortIndex i = 0; i < sorts_.size(); ++i)
    if (sorts_[i] == name) return i;
  throw UnknownLabel("unknown sort '" + std::string(name) + "'");
}

const LabelSet& TypedTable::mu(SortIndex p, SortIndex q) const {
  return mu_.at(p * sorts_.size() + q);
}

const TypedCell* TypedTable::product(const TypedTriple& x, const TypedTriple& y) const {
  if (!mu(x.from, x.to).contains(x.label) || !mu(y.from, y.to).contains(y.label))
    throw UnknownLabel("triple with a label outside its μ-set");
  if (x.to != y.from) return nullptr;
  auto it = products_.find(Key{x.from, x.label, x.to, y.label, y.to});
  return it == products_.end() ? nullptr : &it->second;
}

std::optional<TypedSet> typed_set_product(const TypedTable& t, const TypedSet& x,
                                          const TypedSet& y) {
  if (x.labels.empty() || y.labels.empty()) throw EmptyLabelSet("typed set product of an empty set");
  if (x.to != y.from) return std::nullopt;
  TypedSet out{x.from, y.to, t.alphabet().empty_set()};
  for (auto u : x.labels) {
    for (auto v : y.labels) {
      const TypedCell* c = t.product({x.from, u, x.to}, {y.from, v, y.to});
      if (!c) throw MissingProduct("no value for a composable pair");
      out.labels |= c->labels;
    }
  }
  return out;
}

TypedTable join_build(const JoinSpec& spec) {
  const std::size_t k = spec.sorts.size();
  if (k == 0 || spec.components.size() != k)
    throw RegularityViolation("need exactly one component per sort");
  auto sort_of = [&](const std::string& name) -> SortIndex {
    for (SortIndex i = 0; i < k; ++i)
      if (spec.sorts[i] == name) return i;
    throw RegularityViolation("unknown sort '" + name + "'");
  };

  const auto& first = spec.components.front().alphabet();
  const std::string zero_id = first.id(first.zero());
  std::vector<LabelDecl> decls{{zero_id, Sign::zero, {}}};
  std::set<std::string> taken{zero_id};
  for (SortIndex p = 0; p < k; ++p) {
    const auto& c = spec.components[p];
    const auto& a = c.alphabet();
    if (a.id(a.zero()) != zero_id)
      throw RegularityViolation("components must share the zero label " + zero_id);
    if (c.has_truncated_cells())
      throw WindowExceeded("component " + spec.sorts[p] + " has values beyond its window");
    for (LabelIndex u = 0; u < a.size(); ++u) {
      if (u == a.zero()) continue;
      if (!taken.insert(a.id(u)).second)
        throw RegularityViolation("label " + a.id(u) + " occurs in two diagonal components");
      LabelDecl d{a.id(u), a.sign(u), {}};
      if (a.is_positive(u)) d.inverse = a.id(a.inverse(u));
      decls.push_back(std::move(d));
    }
  }
  for (const auto& cl : spec.cross_labels) {
    if (cl.sign == Sign::zero) throw RegularityViolation("cross label " + cl.id + " has sign zero");
    if (sort_of(cl.from) == sort_of(cl.to))
      throw RegularityViolation("cross label " + cl.id + " must join two different sorts");
    if (!taken.insert(cl.id).second)
      throw RegularityViolation("label " + cl.id + " is declared twice");
    decls.push_back({cl.id, cl.sign, cl.sign == Sign::positive ? cl.inverse : std::string()});
  }
  SignedAlphabet a(std::move(decls));

  std::vector<LabelSet> mu(k * k, a.empty_set());
  for (SortIndex p = 0; p < k; ++p) {
    const auto& ca = spec.components[p].alphabet();
    for (LabelIndex u = 0; u < ca.size(); ++u) mu[p * k + p].insert(a.index(ca.id(u)));
  }
  for (const auto& cl : spec.cross_labels) {
    const SortIndex p = sort_of(cl.from), q = sort_of(cl.to);
    mu[p * k + q].insert(a.index(cl.id));
  }
  for (const auto& cl : spec.cross_labels) {
    if (cl.sign != Sign::positive) continue;
    const SortIndex p = sort_of(cl.from), q = sort_of(cl.to);
    if (!mu[q * k + p].contains(a.index(cl.inverse)))
      throw RegularityViolation("inverse of " + cl.id + " must run from " + cl.to + " to " +
                                cl.from);
  }

  std::map<TypedTable::Key, TypedCell> products;
  for (SortIndex p = 0; p < k; ++p) {
    const auto& c = spec.components[p];
    const auto& ca = c.alphabet();
    for (LabelIndex u = 0; u < ca.size(); ++u) {
      for (LabelIndex v = 0; v < ca.size(); ++v) {
        const Cell& cell = c.cell(u, v);
        TypedCell tc{a.empty_set(), cell.infinite};
        for (auto w : cell.labels) tc.labels.insert(a.index(ca.id(w)));
        products[{p, a.index(ca.id(u)), p, a.index(ca.id(v)), p}] = std::move(tc);
      }
    }
  }
  for (const auto& cp : spec.cross_products) {
    const SortIndex p = sort_of(cp.from), q = sort_of(cp.via), r = sort_of(cp.to);
    const LabelIndex u = a.index(cp.left), v = a.index(cp.right);
    if (!mu[p * k + q].contains(u) || !mu[q * k + r].contains(v))
      throw RegularityViolation("cross product " + cp.left + "·" + cp.right +
                                " does not match its sorts");
    if (p == q && q == r)
      throw RegularityViolation("cross product " + cp.left + "·" + cp.right +
                                " lies inside a component");
    TypedCell tc{a.empty_set()};
    for (const auto& id : cp.result) {
      const LabelIndex w = a.index(id);
      if (!mu[p * k + r].contains(w))
        throw RegularityViolation("value " + id + " of " + cp.left + "·" + cp.right +
                                  " lies outside μ(" + cp.from + "," + cp.to + ")");
      tc.labels.insert(w);
    }
    if (tc.labels.empty()) throw EmptyProduct("empty value for " + cp.left + "·" + cp.right);
    if (!products.emplace(TypedTable::Key{p, u, q, v, r}, std::move(tc)).second)
      throw RegularityViolation("duplicate product " + cp.left + "·" + cp.right);
  }

  TypedTable t(spec.sorts, a, mu, std::move(products));
  for (SortIndex p = 0; p < k; ++p)
    for (SortIndex q = 0; q < k; ++q)
      for (SortIndex r = 0; r < k; ++r)
        for (auto u : t.mu(p, q))
          for (auto v : t.mu(q, r))
            if (!t.product({p, u, q}, {q, v, r}))
              throw MissingProduct("no value for (" + spec.sorts[p] + "," + a.id(u) + "," +
                                   spec.sorts[q] + ")·(" + spec.sorts[q] + "," + a.id(v) + "," +
                                   spec.sorts[r] + ")");
  return t;
}

TypedTable single_sort(const MultiTable& t, std::string sort) {
  if (t.has_truncated_cells())
    throw WindowExceeded("cannot wrap a table with values beyond its window");
  const auto& a = t.alphabet();
  std::map<TypedTable::Key, TypedCell> products;
  for (LabelIndex u = 0; u < a.size(); ++u)
    for (LabelIndex v = 0; v < a.size(); ++v) {
      const Cell& c = t.cell(u, v);
      products[{0, u, 0, v, 0}] = TypedCell{c.labels, c.infinite};
    }
  return TypedTable({std::move(sort)}, a, {a.all()}, std::move(products));
}

MultiTable diagonal(const TypedTable& t, SortIndex p) {
  const auto& a = t.alphabet();
  const LabelSet& m = t.mu(p, p);
  std::vector<LabelDecl> decls;
  for (auto u : m) {
    LabelDecl d{a.id(u), a.sign(u), {}};
    if (a.is_positive(u)) d.inverse = a.id(a.inverse(u));
    decls.push_back(std::move(d));
  }
  SignedAlphabet sub(std::move(decls));
  TableBuilder b(sub);
  for (auto u : m) {
    for (auto v : m) {
      const TypedCell* c = t.product({p, u, p}, {p, v, p});
      if (!c) throw MissingProduct("no value for " + a.id(u) + "·" + a.id(v));
      if (!c->labels.is_subset_of(m))
        throw RegularityViolation("value of " + a.id(u) + "·" + a.id(v) + " leaves μ(" +
                                  t.sorts()[p] + ")");
      Cell cell{sub.empty_set(), c->infinite, false};
      for (auto w : c->labels) cell.labels.insert(sub.index(a.id(w)));
      b.set(sub.index(a.id(u)), sub.index(a.id(v)), cell);
    }
  }
  return b.build();
}

namespace {

using Outcome = InstanceOutcome;

class Recorder {
 public:
  Recorder(std::string id, std::string desc) {
    r_.id = std::move(id);
    r_.description = std::move(desc);
  }
  bool stopped() const { return r_.status == CheckStatus::fail; }
  void add(Outcome o) {
    if (o != Outcome::not_applicable) ++r_.instances;
    if (o == Outcome::skipped) ++r_.skipped;
  }
  void fail(Witness w) {
    ++r_.instances;
    r_.status = CheckStatus::fail;
    r_.witness = std::move(w);
  }
  CheckResult finish() {
    if (r_.status != CheckStatus::fail && r_.skipped > 0) r_.status = CheckStatus::skipped_window;
    r_.vacuous = r_.status == CheckStatus::pass && r_.instances == 0;
    return std::move(r_);
  }

 private:
  CheckResult r_;
};

struct TypedScan {
  const TypedTable& t;
  const SignedAlphabet& a;
  std::size_t k;

  std::string triple(SortIndex p, LabelIndex u, SortIndex q) const {
    return "(" + t.sorts()[p] + "," + a.id(u) + "," + t.sorts()[q] + ")";
  }

  // calls f(p, u, q, v, r) for every composable pair until f returns false
  void pairs(const std::function<bool(SortIndex, LabelIndex, SortIndex, LabelIndex, SortIndex)>& f) const {
    for (SortIndex p = 0; p < k; ++p)
      for (SortIndex q = 0; q < k; ++q)
        for (SortIndex r = 0; r < k; ++r)
          for (auto u : t.mu(p, q))
            for (auto v : t.mu(q, r))
              if (!f(p, u, q, v, r)) return;
  }

  // nullptr for undefined pairs, including labels outside their μ-set
  const TypedCell* cell(SortIndex p, LabelIndex u, SortIndex q, LabelIndex v, SortIndex r) const {
    if (!t.mu(p, q).contains(u) || !t.mu(q, r).contains(v)) return nullptr;
    return t.product({p, u, q}, {q, v, r});
  }
};

CheckResult check_regularity(const TypedScan& s) {
  Recorder rec("IR0-regularity", "0 ∈ μ(p,q) iff p = q; μ-sets disjoint apart from 0; cover U");
  const auto& t = s.t;
  const auto& a = s.a;
  const LabelIndex z = a.zero();
  auto fail = [&](std::vector<LabelIndex> labels, std::string detail) {
    rec.fail(Witness{std::move(labels), {}, std::move(detail)});
  };
  LabelSet covered = a.empty_set();
  for (SortIndex p = 0; p < s.k && !rec.stopped(); ++p) {
    for (SortIndex q = 0; q < s.k && !rec.stopped(); ++q) {
      const LabelSet& m = t.mu(p, q);
      covered |= m;
      rec.add(Outcome::holds);
      if ((p == q) != m.contains(z)) {
        fail({z}, "0 ∈ μ(" + t.sorts()[p] + "," + t.sorts()[q] + ") must hold exactly when the sorts agree");
        break;
      }
      for (auto u : m) {
        if (a.is_positive(u) && !t.mu(q, p).contains(a.inverse(u))) {
          fail({u}, "inverse of " + a.id(u) + " is not in μ(" + t.sorts()[q] + "," + t.sorts()[p] + ")");
          break;
        }
      }
      for (SortIndex p2 = 0; p2 < s.k && !rec.stopped(); ++p2) {
        for (SortIndex q2 = 0; q2 < s.k && !rec.stopped(); ++q2) {
          if (p2 * s.k + q2 <= p * s.k + q) continue;
          LabelSet common = m & t.mu(p2, q2);
          common.erase(z);
          if (!common.empty())
            fail({*common.begin()}, a.id(*common.begin()) + " lies in μ(" + t.sorts()[p] + "," +
                                        t.sorts()[q] + ") and μ(" + t.sorts()[p2] + "," +
                                        t.sorts()[q2] + ")");
        }
      }
    }
  }
  if (!rec.stopped() && covered != a.all()) {
    auto missing = a.all().minus(covered);
    fail({*missing.begin()}, a.id(*missing.begin()) + " lies in no μ-set");
  }
  return rec.finish();
}

CheckResult check_defined(const TypedScan& s) {
  Recorder rec("IR1-defined", "composable triples have a nonempty value inside μ(p,r)");
  s.pairs([&](SortIndex p, LabelIndex u, SortIndex q, LabelIndex v, SortIndex r) {
    const TypedCell* c = s.cell(p, u, q, v, r);
    std::string where = s.triple(p, u, q) + "·" + s.triple(q, v, r);
    if (!c) {
      rec.fail(Witness{{u, v}, {}, where + " has no value"});
      return false;
    }
    if (c->labels.empty() && !c->infinite) {
      rec.fail(Witness{{u, v}, {}, where + " is empty"});
      return false;
    }
    if (!c->labels.is_subset_of(s.t.mu(p, r))) {
      rec.fail(Witness{{u, v}, {{where, c->labels}}, where + " leaves μ(" + s.t.sorts()[p] + "," + s.t.sorts()[r] + ")"});
      return false;
    }
    rec.add(Outcome::holds);
    return true;
  });
  return rec.finish();
}

CheckResult check_unit(const TypedScan& s) {
  Recorder rec("IR2-unit", "(p,0,p)·(p,u,q) = (p,u,q)·(q,0,q) = {(p,u,q)}");
  const LabelIndex z = s.a.zero();
  for (SortIndex p = 0; p < s.k && !rec.stopped(); ++p) {
    for (SortIndex q = 0; q < s.k && !rec.stopped(); ++q) {
      for (auto u : s.t.mu(p, q)) {
        const LabelSet self = s.a.singleton(u);
        const TypedCell* l = s.t.mu(p, p).contains(z) ? s.cell(p, z, p, u, q) : nullptr;
        const TypedCell* r = s.t.mu(q, q).contains(z) ? s.cell(p, u, q, z, q) : nullptr;
        if (!l || !r) continue;  // reported by the regularity check
        if (l->labels != self || r->labels != self || l->infinite || r->infinite) {
          rec.fail(Witness{{u}, {}, "0 is not a unit for " + s.triple(p, u, q)});
          break;
        }
        rec.add(Outcome::holds);
      }
    }
  }
  return rec.finish();
}

CheckResult check_diagonals(const TypedScan& s) {
  Recorder rec("IR3-diagonal", "each μ(p,p) restriction satisfies A1-A8");
  for (SortIndex p = 0; p < s.k && !rec.stopped(); ++p) {
    const std::string& sort = s.t.sorts()[p];
    try {
      MultiTable d = diagonal(s.t, p);
      ValidationReport rep = validate_i_groupoid(d);
      bool skipped = false;
      for (const auto& c : rep.checks) {
        if (c.status == CheckStatus::fail) {
          Witness w;
          for (auto i : c.witness->labels) w.labels.push_back(s.a.index(d.alphabet().id(i)));
          w.detail = "sort " + sort + ": " + c.id + " fails: " + c.witness->detail;
          rec.fail(std::move(w));
          break;
        }
        skipped |= c.status == CheckStatus::skipped_window;
      }
      if (!rec.stopped()) rec.add(skipped ? Outcome::skipped : Outcome::holds);
    } catch (const Error& e) {
      rec.fail(Witness{{}, {}, "sort " + sort + ": " + e.what()});
    }
  }
  return rec.finish();
}

CheckResult check_signs(const TypedScan& s, bool negative) {
  Recorder rec(negative ? "IR4-neg-absorption" : "IR5-pos-closure",
               negative ? "a negative factor gives a negative value"
                        : "non-negative factors give a non-negative value");
  const LabelSet neg = s.a.negatives();
  s.pairs([&](SortIndex p, LabelIndex u, SortIndex q, LabelIndex v, SortIndex r) {
    const TypedCell* c = s.cell(p, u, q, v, r);
    if (!c) return true;
    const bool has_neg = s.a.is_negative(u) || s.a.is_negative(v);
    if (negative != has_neg) return true;
    const bool ok = negative ? c->labels.is_subset_of(neg) : !c->labels.intersects(neg);
    std::string where = s.triple(p, u, q) + "·" + s.triple(q, v, r);
    if (!ok) {
      rec.fail(Witness{{u, v}, {{where, c->labels}},
                       where + (negative ? " has a non-negative member" : " has a negative member")});
      return false;
    }
    rec.add(Outcome::holds);
    return true;
  });
  return rec.finish();
}

CheckResult check_inverse(const TypedScan& s) {
  Recorder rec("IR6-inverse", "positive (p,u,q) has exactly one inverse in μ(q,p)");
  const LabelIndex z = s.a.zero();
  for (SortIndex p = 0; p < s.k && !rec.stopped(); ++p) {
    for (SortIndex q = 0; q < s.k && !rec.stopped(); ++q) {
      for (auto u : s.t.mu(p, q)) {
        if (s.a.is_negative(u)) continue;
        const LabelIndex inv = s.a.inverse(u);
        if (!s.t.mu(q, p).contains(inv)) continue;  // regularity
        auto zero_both = [&](LabelIndex w) {
          const TypedCell* l = s.cell(p, u, q, w, p);
          const TypedCell* r = s.cell(q, w, p, u, q);
          return l && r && l->labels.contains(z) && r->labels.contains(z);
        };
        if (!zero_both(inv)) {
          rec.fail(Witness{{u, inv}, {}, "0 is missing from the products of " + s.triple(p, u, q) +
                                             " with its inverse"});
          break;
        }
        for (auto w : s.t.mu(q, p)) {
          if (w != inv && zero_both(w)) {
            rec.fail(Witness{{u, w}, {}, s.a.id(w) + " is a second inverse of " + s.triple(p, u, q)});
            break;
          }
        }
        if (rec.stopped()) break;
        rec.add(Outcome::holds);
      }
    }
  }
  return rec.finish();
}

CheckResult check_anti_hom(const TypedScan& s) {
  Recorder rec("IR7-anti-hom", "(p,u,r) ∈ (p,v1,q)(q,v2,r), all ≥ 0, gives u⁻¹ ∈ (r,v2⁻¹,q)(q,v1⁻¹,p)");
  s.pairs([&](SortIndex p, LabelIndex v1, SortIndex q, LabelIndex v2, SortIndex r) {
    if (s.a.is_negative(v1) || s.a.is_negative(v2)) return true;
    const TypedCell* c = s.cell(p, v1, q, v2, r);
    if (!c) return true;
    const LabelSet hyp = c->labels & s.a.nonnegatives();
    if (hyp.empty()) return true;
    const LabelIndex i1 = s.a.inverse(v1), i2 = s.a.inverse(v2);
    if (!s.t.mu(r, q).contains(i2) || !s.t.mu(q, p).contains(i1)) return true;
    const TypedCell* rev = s.cell(r, i2, q, i1, p);
    for (auto u : hyp) {
      if (!rev || !rev->labels.contains(s.a.inverse(u))) {
        rec.fail(Witness{{v1, v2, u}, {}, s.a.id(s.a.inverse(u)) + " ∉ " + s.triple(r, i2, q) + "·" + s.triple(q, i1, p)});
        return false;
      }
    }
    rec.add(Outcome::holds);
    return true;
  });
  return rec.finish();
}

CheckResult check_assoc(const TypedScan& s, bool strictness) {
  Recorder rec(strictness ? "IR9-strictness" : "IR8-semi-assoc",
               strictness ? "left bracketing ⊆ right bracketing unless u1 < 0 and u2·u3 is infinite"
                          : "left bracketing ⊇ right bracketing on composable chains");
  const std::size_t k = s.k;
  for (SortIndex p = 0; p < k && !rec.stopped(); ++p)
    for (SortIndex q = 0; q < k && !rec.stopped(); ++q)
      for (SortIndex r = 0; r < k && !rec.stopped(); ++r)
        for (SortIndex x = 0; x < k && !rec.stopped(); ++x)
          for (auto u1 : s.t.mu(p, q)) {
            if (rec.stopped()) break;
            for (auto u2 : s.t.mu(q, r)) {
              if (rec.stopped()) break;
              for (auto u3 : s.t.mu(r, x)) {
                const TypedCell* c12 = s.cell(p, u1, q, u2, r);
                const TypedCell* c23 = s.cell(q, u2, r, u3, x);
                if (!c12 || !c23) continue;
                LabelSet left = s.a.empty_set(), right = s.a.empty_set();
                bool missing = false;
                for (auto w : c12->labels) {
                  const TypedCell* c = s.cell(p, w, r, u3, x);
                  if (!c) { missing = true; break; }
                  left |= c->labels;
                }
                for (auto w : c23->labels) {
                  if (missing) break;
                  const TypedCell* c = s.cell(p, u1, q, w, x);
                  if (!c) { missing = true; break; }
                  right |= c->labels;
                }
                if (missing) continue;
                bool ok = strictness
                              ? left.is_subset_of(right) || (s.a.is_negative(u1) && c23->infinite)
                              : right.is_subset_of(left);
                if (!ok) {
                  rec.fail(Witness{{u1, u2, u3},
                                   {{"left bracketing", left}, {"right bracketing", right}},
                                   "chain " + s.triple(p, u1, q) + s.triple(q, u2, r) + s.triple(r, u3, x)});
                  break;
                }
                rec.add(Outcome::holds);
              }
            }
          }
  return rec.finish();
}

LabelSet typed_deterministic(const TypedScan& s) {
  LabelSet d = s.a.empty_set();
  const LabelIndex z = s.a.zero();
  for (LabelIndex u = 0; u < s.a.size(); ++u) {
    if (s.a.is_negative(u)) continue;
    const LabelIndex inv = s.a.inverse(u);
    bool ok = true, homed = false;
    for (SortIndex p = 0; p < s.k && ok; ++p) {
      for (SortIndex q = 0; q < s.k && ok; ++q) {
        if (!s.t.mu(p, q).contains(u)) continue;
        homed = true;
        if (!s.t.mu(q, p).contains(inv)) { ok = false; break; }
        const TypedCell* c = s.cell(q, inv, p, u, q);
        ok = c && !c->infinite && c->labels == s.a.singleton(z);
      }
    }
    if (ok && homed) d.insert(u);
  }
  return d;
}

CheckResult check_determinism(const TypedScan& s) {
  Recorder rec("IR10-determinism", "composable deterministic triples have a single value");
  const LabelSet d = typed_deterministic(s);
  s.pairs([&](SortIndex p, LabelIndex u, SortIndex q, LabelIndex v, SortIndex r) {
    if (!d.contains(u) || !d.contains(v)) return true;
    const TypedCell* c = s.cell(p, u, q, v, r);
    if (!c) return true;
    if (c->infinite || c->labels.size() != 1) {
      rec.fail(Witness{{u, v}, {{"value", c->labels}}, s.triple(p, u, q) + "·" + s.triple(q, v, r) + " is not a singleton"});
      return false;
    }
    rec.add(Outcome::holds);
    return true;
  });
  return rec.finish();
}

}  // namespace

ValidationReport validate_ir_structure(const TypedTable& t) {
  TypedScan s{t, t.alphabet(), t.sort_count()};
  ValidationReport rep;
  rep.checks.push_back(check_regularity(s));
  rep.checks.push_back(check_defined(s));
  rep.checks.push_back(check_unit(s));
  rep.checks.push_back(check_diagonals(s));
  rep.checks.push_back(check_signs(s, true));
  rep.checks.push_back(check_signs(s, false));
  rep.checks.push_back(check_inverse(s));
  rep.checks.push_back(check_anti_hom(s));
  rep.checks.push_back(check_assoc(s, false));
  rep.checks.push_back(check_assoc(s, true));
  rep.checks.push_back(check_determinism(s));
  std::size_t pairs = 0, triples = 0;
  const std::size_t k = t.sort_count();
  for (SortIndex p = 0; p < k; ++p)
    for (SortIndex q = 0; q < k; ++q)
      for (SortIndex r = 0; r < k; ++r) {
        pairs += t.mu(p, q).size() * t.mu(q, r).size();
        for (SortIndex x = 0; x < k; ++x)
          triples += t.mu(p, q).size() * t.mu(q, r).size() * t.mu(r, x).size();
      }
  rep.pairs_checked = pairs;
  rep.triples_checked = triples;
  return rep;
}

TypedAnalysis typed_analysis(const TypedTable& t) {
  TypedScan s{t, t.alphabet(), t.sort_count()};
  const auto& a = t.alphabet();
  TypedAnalysis out;
  bool diagonals_nonneg = true;
  for (SortIndex p = 0; p < s.k; ++p) {
    MultiTable d = diagonal(t, p);
    SortAnalysis sa{t.sorts()[p], classify_relation(d), a.empty_set()};
    for (auto u : deterministic_core(d)) sa.core.insert(a.index(d.alphabet().id(u)));
    diagonals_nonneg &= !t.mu(p, p).intersects(a.negatives());
    out.sorts.push_back(std::move(sa));
  }
  bool finite = true, any_pos = false, any_neg = false, deterministic = true;
  for (const auto& [key, cell] : t.products()) {
    finite &= !cell.infinite;
    deterministic &= !cell.infinite && cell.labels.size() == 1;
  }
  for (LabelIndex u = 0; u < a.size(); ++u) {
    any_pos |= a.is_positive(u);
    any_neg |= a.is_negative(u);
  }
  out.overall.transitive = finite;
  out.overall.partial_order = finite && !any_pos;
  out.overall.equivalence = finite && !any_neg;

  out.deterministic = typed_deterministic(s);
  s.pairs([&](SortIndex p, LabelIndex u, SortIndex q, LabelIndex v, SortIndex r) {
    if (!out.deterministic.contains(u) || !out.deterministic.contains(v)) return true;
    const TypedCell* c = s.cell(p, u, q, v, r);
    if (c && !c->labels.is_subset_of(out.deterministic)) {
      out.deterministic_closed = false;
      return false;
    }
    return true;
  });
  out.group_core = a.empty_set();
  for (auto u : out.deterministic)
    if (out.deterministic.contains(a.inverse(u))) out.group_core.insert(u);
  out.join_of_groups = deterministic && diagonals_nonneg;
  return out;
}

}  // namespace isolab
