#include "isolab/table.hpp"

#include <algorithm>

#include "isolab/errors.hpp"

namespace isolab {

MultiTable::MultiTable(SignedAlphabet alphabet, std::vector<Cell> cells,
                       std::shared_ptr<const RuleInfo> rule)
    : alphabet_(std::move(alphabet)), cells_(std::move(cells)), rule_(std::move(rule)) {
  const std::size_t n = alphabet_.size();
  if (cells_.size() != n * n) throw MissingProduct("table needs " + std::to_string(n * n) + " cells");
  for (LabelIndex u = 0; u < n; ++u) {
    for (LabelIndex v = 0; v < n; ++v) {
      const Cell& c = cells_[u * n + v];
      if (c.labels.universe() != n)
        throw UnknownLabel("cell " + alphabet_.id(u) + "·" + alphabet_.id(v) +
                           " refers to another alphabet");
      if (c.labels.empty() && !c.exceeds_window && !c.infinite)
        throw EmptyProduct("product " + alphabet_.id(u) + "·" + alphabet_.id(v) + " is empty");
    }
  }
}

const Cell& MultiTable::cell(LabelIndex u, LabelIndex v) const {
  const std::size_t n = size();
  if (u >= n || v >= n) throw UnknownLabel("label index out of range");
  return cells_[u * n + v];
}

const LabelSet& MultiTable::product(LabelIndex u, LabelIndex v) const {
  const Cell& c = cell(u, v);
  if (c.exceeds_window)
    throw WindowExceeded("product " + alphabet_.id(u) + "·" + alphabet_.id(v) +
                         " leaves the window");
  return c.labels;
}

LabelSet MultiTable::product(std::string_view u, std::string_view v) const {
  return product(index(u), index(v));
}

LabelIndex MultiTable::index(std::string_view id) const {
  if (auto i = alphabet_.find(id)) return *i;
  if (rule_ && rule_->recognizes && rule_->recognizes(id))
    throw WindowExceeded("label '" + std::string(id) + "' lies outside window " +
                         std::to_string(rule_->window));
  throw UnknownLabel("unknown label '" + std::string(id) + "'");
}

std::vector<LabelIndex> MultiTable::word(const std::vector<std::string>& ids) const {
  std::vector<LabelIndex> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(index(id));
  return out;
}

std::optional<std::size_t> MultiTable::window() const {
  if (!rule_) return std::nullopt;
  return rule_->window;
}

bool MultiTable::has_infinite_cells() const {
  return std::any_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.infinite; });
}

bool MultiTable::has_truncated_cells() const {
  return std::any_of(cells_.begin(), cells_.end(),
                     [](const Cell& c) { return c.exceeds_window; });
}

MultiTable MultiTable::without_infinite_flags() const {
  auto cells = cells_;
  for (auto& c : cells) c.infinite = false;
  return MultiTable(alphabet_, std::move(cells), rule_);
}

MultiTable MultiTable::renamed_rule(std::string name) const {
  if (!rule_) throw Error("table is not rule-backed");
  auto info = std::make_shared<RuleInfo>(*rule_);
  info->name = std::move(name);
  return MultiTable(alphabet_, cells_, std::move(info));
}

TableBuilder::TableBuilder(SignedAlphabet alphabet)
    : alphabet_(std::move(alphabet)), cells_(alphabet_.size() * alphabet_.size()) {}

TableBuilder& TableBuilder::set(LabelIndex u, LabelIndex v, Cell c) {
  const std::size_t n = alphabet_.size();
  if (u >= n || v >= n) throw UnknownLabel("label index out of range");
  cells_[u * n + v] = std::move(c);
  return *this;
}

TableBuilder& TableBuilder::set(std::string_view u, std::string_view v,
                                const std::vector<std::string>& result, bool infinite) {
  Cell c{alphabet_.set_of(result), infinite, false};
  return set(alphabet_.index(u), alphabet_.index(v), std::move(c));
}

TableBuilder& TableBuilder::unit_law() {
  const std::size_t n = alphabet_.size();
  const LabelIndex z = alphabet_.zero();
  for (LabelIndex u = 0; u < n; ++u) {
    if (!cells_[z * n + u]) cells_[z * n + u] = Cell{alphabet_.singleton(u)};
    if (!cells_[u * n + z]) cells_[u * n + z] = Cell{alphabet_.singleton(u)};
  }
  return *this;
}

bool TableBuilder::is_set(LabelIndex u, LabelIndex v) const {
  return cells_.at(u * alphabet_.size() + v).has_value();
}

MultiTable TableBuilder::build(std::shared_ptr<const RuleInfo> rule) const {
  const std::size_t n = alphabet_.size();
  std::vector<Cell> cells;
  cells.reserve(n * n);
  for (LabelIndex u = 0; u < n; ++u) {
    for (LabelIndex v = 0; v < n; ++v) {
      const auto& c = cells_[u * n + v];
      if (!c)
        throw MissingProduct("no value for " + alphabet_.id(u) + "·" + alphabet_.id(v));
      cells.push_back(*c);
    }
  }
  return MultiTable(alphabet_, std::move(cells), std::move(rule));
}

namespace {

void require_operand(const MultiTable& t, const LabelSet& x) {
  if (x.universe() != t.size()) throw UnknownLabel("label set belongs to another alphabet");
  if (x.empty()) throw EmptyLabelSet("set product of an empty label set");
}

}  // namespace

LabelSet set_product(const MultiTable& t, const LabelSet& x, const LabelSet& y) {
  require_operand(t, x);
  require_operand(t, y);
  LabelSet out(t.size());
  for (auto u : x)
    for (auto v : y) out |= t.product(u, v);
  return out;
}

std::optional<LabelSet> try_set_product(const MultiTable& t, const LabelSet& x,
                                        const LabelSet& y) {
  require_operand(t, x);
  require_operand(t, y);
  LabelSet out(t.size());
  for (auto u : x) {
    for (auto v : y) {
      const Cell& c = t.cell(u, v);
      if (c.exceeds_window) return std::nullopt;
      out |= c.labels;
    }
  }
  return out;
}

LabelSet word_product(const MultiTable& t, const std::vector<LabelIndex>& word) {
  if (word.empty()) throw EmptyLabelSet("empty word");
  LabelSet acc = t.alphabet().singleton(word.front());
  for (std::size_t i = 1; i < word.size(); ++i)
    acc = set_product(t, acc, t.alphabet().singleton(word[i]));
  return acc;
}

LabelSet word_product(const MultiTable& t, const std::vector<std::string>& word) {
  return word_product(t, t.word(word));
}

LabelIndex inverse_of(const MultiTable& t, LabelIndex u) { return t.alphabet().inverse(u); }

LabelSet set_inverse(const MultiTable& t, const LabelSet& x) {
  LabelSet out(t.size());
  for (auto u : x) out.insert(t.alphabet().inverse(u));
  return out;
}

MultiTable restrict_to(const MultiTable& t, const LabelSet& keep) {
  const auto& a = t.alphabet();
  if (!keep.contains(a.zero())) throw ClosureViolation("restriction must contain the zero label");
  for (auto u : keep) {
    if (a.has_inverse(u) && !keep.contains(a.inverse(u)))
      throw ClosureViolation("restriction is not closed under inverse: " + a.id(u));
  }
  std::vector<LabelDecl> decls;
  std::vector<LabelIndex> old;
  for (auto u : keep) {
    LabelDecl d{a.id(u), a.sign(u), {}};
    if (a.is_positive(u)) d.inverse = a.id(a.inverse(u));
    decls.push_back(std::move(d));
    old.push_back(u);
  }
  SignedAlphabet sub(std::move(decls));
  std::vector<Cell> cells;
  for (auto u : old) {
    for (auto v : old) {
      const Cell& c = t.cell(u, v);
      if (!c.labels.is_subset_of(keep) || c.exceeds_window)
        throw ClosureViolation("restriction is not closed under " + a.id(u) + "·" + a.id(v));
      Cell nc{LabelSet(sub.size()), c.infinite, false};
      for (auto w : c.labels) nc.labels.insert(sub.index(a.id(w)));
      cells.push_back(std::move(nc));
    }
  }
  std::shared_ptr<const RuleInfo> rule;
  if (t.rule()) rule = std::make_shared<RuleInfo>(*t.rule());
  return MultiTable(std::move(sub), std::move(cells), std::move(rule));
}

namespace {

bool same_alphabet(const SignedAlphabet& a, const SignedAlphabet& b) {
  if (a.size() != b.size()) return false;
  for (LabelIndex i = 0; i < a.size(); ++i) {
    auto j = b.find(a.id(i));
    if (!j || a.sign(i) != b.sign(*j)) return false;
    if (a.has_inverse(i) && b.id(b.inverse(*j)) != a.id(a.inverse(i))) return false;
  }
  return true;
}

std::string id_list(const SignedAlphabet& a) {
  return format_set(a, a.all());
}

}  // namespace

std::vector<CellDiff> compare_tables(const MultiTable& expected, const MultiTable& actual) {
  const auto& ea = expected.alphabet();
  const auto& aa = actual.alphabet();
  if (!same_alphabet(ea, aa))
    throw AlphabetMismatch("alphabets differ: " + id_list(ea) + " vs " + id_list(aa));
  std::vector<CellDiff> out;
  for (LabelIndex u = 0; u < ea.size(); ++u) {
    for (LabelIndex v = 0; v < ea.size(); ++v) {
      const Cell& e = expected.cell(u, v);
      const Cell& c = actual.cell(aa.index(ea.id(u)), aa.index(ea.id(v)));
      auto e_ids = ea.ids_of(e.labels);
      auto c_ids = aa.ids_of(c.labels);
      std::sort(e_ids.begin(), e_ids.end());
      std::sort(c_ids.begin(), c_ids.end());
      if (e_ids != c_ids || e.exceeds_window != c.exceeds_window || e.infinite != c.infinite) {
        out.push_back(CellDiff{ea.id(u), ea.id(v), e, c, ea.ids_of(e.labels), aa.ids_of(c.labels)});
      }
    }
  }
  return out;
}

}  // namespace isolab
