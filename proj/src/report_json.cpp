#include "isolab/report_json.hpp"

#include <sstream>

namespace isolab {

namespace {

Json cell_json(const std::optional<Cell>& c, const std::vector<std::string>& ids) {
  if (!c) return nullptr;
  Json j = Json::object();
  j["result"] = ids;
  if (c->infinite) j["infinite"] = true;
  if (c->exceeds_window) j["truncated"] = true;
  return j;
}

std::string cell_text(const std::optional<Cell>& c, const std::vector<std::string>& ids) {
  if (!c) return "missing";
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + ids[i];
  s += "}";
  if (c->infinite) s += " (infinite)";
  if (c->exceeds_window) s += " (truncated)";
  return s;
}

}  // namespace

Json set_to_json(const SignedAlphabet& a, const LabelSet& s) { return a.ids_of(s); }

Json report_to_json(const SignedAlphabet& a, const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["id"] = c.id;
    j["status"] = std::string(to_string(c.status));
    j["vacuous"] = c.vacuous;
    j["instances"] = c.instances;
    j["skipped"] = c.skipped;
    if (c.witness) {
      Json w;
      Json labels = Json::array();
      for (auto i : c.witness->labels) labels.push_back(a.id(i));
      w["labels"] = labels;
      Json sets = Json::array();
      for (const auto& s : c.witness->sets) sets.push_back({{"name", s.name}, {"labels", a.ids_of(s.labels)}});
      w["sets"] = sets;
      w["detail"] = c.witness->detail;
      j["witness"] = w;
    }
    checks.push_back(j);
  }
  Json out;
  out["overall"] = std::string(to_string(r.overall()));
  out["pairs_checked"] = r.pairs_checked;
  out["triples_checked"] = r.triples_checked;
  out["checks"] = checks;
  return out;
}

std::string report_to_text(const SignedAlphabet& a, const ValidationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << c.id << ": " << to_string(c.status);
    if (c.vacuous) os << " (vacuous)";
    if (c.skipped) os << " (" << c.skipped << " of " << c.instances << " instances outside window)";
    os << "\n";
    if (c.witness) {
      os << "  witness:";
      for (auto i : c.witness->labels) os << " " << a.id(i);
      os << "\n";
      for (const auto& s : c.witness->sets) os << "  " << s.name << " = " << format_set(a, s.labels) << "\n";
      if (!c.witness->detail.empty()) os << "  " << c.witness->detail << "\n";
    }
  }
  os << "overall: " << to_string(r.overall()) << "\n";
  return os.str();
}

Json classify_to_json(const RelationClass& c) {
  return {{"transitive", c.transitive}, {"partial_order", c.partial_order}, {"equivalence", c.equivalence}};
}

Json sop_to_json(const SignedAlphabet& a, const std::optional<SopWitness>& w) {
  if (!w) return nullptr;
  Json j;
  j["kind"] = std::string(to_string(w->kind));
  if (w->kind == SopWitness::Kind::direct_closure) j["u"] = a.id(w->u);
  j["x"] = a.ids_of(w->x);
  if (w->kind == SopWitness::Kind::power_closure) j["n"] = w->n;
  return j;
}

Json special_to_json(const SignedAlphabet& a, const SpecialResult& r) {
  Json j;
  j["passed"] = r.passed;
  j["words_checked"] = r.words_checked;
  if (r.witness) {
    Json word = Json::array();
    for (auto i : r.witness->word) word.push_back(a.id(i));
    j["witness"] = {{"word", word}, {"v", a.id(r.witness->v)}, {"u", a.id(r.witness->u)}};
  }
  return j;
}

Json powerful_to_json(const SignedAlphabet& a, const PowerfulResult& r) {
  Json j;
  j["passed"] = r.passed;
  j["no_zero_in_words"] = r.no_zero_in_words;
  j["generators_meet"] = r.generators_meet;
  Json w = Json::array();
  for (auto i : r.witness) w.push_back(a.id(i));
  j["witness"] = w;
  j["detail"] = r.detail;
  j["acl_approx"] = std::string(to_string(r.acl_approx));
  j["acl_detail"] = r.acl_detail;
  return j;
}

Json lattice_to_json(const SignedAlphabet& a, const RestrictionLattice& l) {
  Json nodes = Json::array();
  for (const auto& n : l.nodes) nodes.push_back({{"id", n.id}, {"name", n.name}, {"labels", a.ids_of(n.labels)}});
  Json edges = Json::array();
  for (auto [lo, hi] : l.structural) edges.push_back({l.nodes[lo].id, l.nodes[hi].id});
  Json classes = Json::array();
  for (const auto& c : l.classes) {
    Json members = Json::array();
    for (auto i : c) members.push_back(l.nodes[i].id);
    classes.push_back(members);
  }
  Json hasse = Json::array();
  for (auto [lo, hi] : l.hasse) hasse.push_back({lo, hi});
  Json j;
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["classes"] = classes;
  j["hasse"] = hasse;
  j["undecided_products"] = l.undecided_products;
  return j;
}

Json diff_to_json(const std::vector<CellDiff>& diffs) {
  Json arr = Json::array();
  for (const auto& d : diffs) {
    Json j;
    j["left"] = d.left;
    j["right"] = d.right;
    j["expected"] = cell_json(d.expected, d.expected_ids);
    j["actual"] = cell_json(d.actual, d.actual_ids);
    arr.push_back(j);
  }
  return arr;
}

std::string diff_to_text(const std::vector<CellDiff>& diffs) {
  std::ostringstream os;
  for (const auto& d : diffs)
    os << d.left << "·" << d.right << ": expected " << cell_text(d.expected, d.expected_ids)
       << ", derived " << cell_text(d.actual, d.actual_ids) << "\n";
  os << diffs.size() << " differing cell" << (diffs.size() == 1 ? "" : "s") << "\n";
  return os.str();
}

Json notes_to_json(const std::vector<DerivationNote>& notes) {
  Json arr = Json::array();
  for (const auto& n : notes)
    arr.push_back({{"kind", n.kind}, {"left", n.left}, {"right", n.right}, {"derived", n.derived},
                   {"expected", n.expected}});
  return arr;
}

Json typed_analysis_to_json(const TypedTable& t, const TypedAnalysis& an) {
  const auto& a = t.alphabet();
  Json sorts = Json::array();
  for (const auto& s : an.sorts)
    sorts.push_back({{"sort", s.sort}, {"classify", classify_to_json(s.relation)}, {"core", a.ids_of(s.core)}});
  Json j;
  j["sorts"] = sorts;
  j["classify"] = classify_to_json(an.overall);
  j["deterministic"] = a.ids_of(an.deterministic);
  j["deterministic_closed"] = an.deterministic_closed;
  j["group_core"] = a.ids_of(an.group_core);
  j["join_of_groups"] = an.join_of_groups;
  return j;
}

}  // namespace isolab
