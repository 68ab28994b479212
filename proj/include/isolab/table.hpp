#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isolab/alphabet.hpp"

namespace isolab {

// One entry u·v of a multiplication table. For explicit tables `labels` is
// the whole value. For windowed tables it is the part of the value that lies
// inside the window: `exceeds_window` marks a finite value with members
// beyond it, `infinite` a declared infinite value whose visible slice stands
// for the rest.
struct Cell {
  LabelSet labels;
  bool infinite = false;
  bool exceeds_window = false;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Metadata of a rule-generated table. `recognizes` tells whether an id
// belongs to the rule's full (unwindowed) alphabet, so out-of-window queries
// can be told apart from typos.
struct RuleInfo {
  std::string name;
  std::size_t window = 0;
  bool negatives_finite = true;
  std::function<bool(std::string_view)> recognizes;
};

class MultiTable {
 public:
  MultiTable(SignedAlphabet alphabet, std::vector<Cell> cells,
             std::shared_ptr<const RuleInfo> rule = nullptr);

  const SignedAlphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }

  const Cell& cell(LabelIndex u, LabelIndex v) const;
  // Throws WindowExceeded when the value leaves the window.
  const LabelSet& product(LabelIndex u, LabelIndex v) const;
  LabelSet product(std::string_view u, std::string_view v) const;

  // Like SignedAlphabet::index but reports WindowExceeded for ids the rule
  // knows about that fall outside the current window.
  LabelIndex index(std::string_view id) const;
  std::vector<LabelIndex> word(const std::vector<std::string>& ids) const;

  bool rule_backed() const { return rule_ != nullptr; }
  const RuleInfo* rule() const { return rule_.get(); }
  std::optional<std::size_t> window() const;
  bool negatives_finite() const { return !rule_ || rule_->negatives_finite; }

  bool has_infinite_cells() const;
  bool has_truncated_cells() const;

  // Same values with every infinite flag cleared.
  MultiTable without_infinite_flags() const;
  // Same values under another rule name (keeps window and recognizer).
  MultiTable renamed_rule(std::string name) const;

 private:
  SignedAlphabet alphabet_;
  std::vector<Cell> cells_;
  std::shared_ptr<const RuleInfo> rule_;
};

class TableBuilder {
 public:
  explicit TableBuilder(SignedAlphabet alphabet);

  const SignedAlphabet& alphabet() const { return alphabet_; }

  TableBuilder& set(LabelIndex u, LabelIndex v, Cell c);
  TableBuilder& set(LabelIndex u, LabelIndex v, const LabelSet& s) {
    return set(u, v, Cell{s});
  }
  TableBuilder& set(std::string_view u, std::string_view v,
                    const std::vector<std::string>& result, bool infinite = false);
  // Fills every unset cell that has the zero label as a factor.
  TableBuilder& unit_law();
  bool is_set(LabelIndex u, LabelIndex v) const;

  // MissingProduct if a pair is unset, EmptyProduct if a finite in-window
  // value is empty.
  MultiTable build(std::shared_ptr<const RuleInfo> rule = nullptr) const;

 private:
  SignedAlphabet alphabet_;
  std::vector<std::optional<Cell>> cells_;
};

// Union of u·v over u in x, v in y. Inputs must be nonempty.
LabelSet set_product(const MultiTable& t, const LabelSet& x, const LabelSet& y);
// Returns nullopt instead of throwing when some value leaves the window.
std::optional<LabelSet> try_set_product(const MultiTable& t, const LabelSet& x,
                                        const LabelSet& y);

// Left-bracketed product (((u1 u2) u3) ... uk) of a nonempty word.
LabelSet word_product(const MultiTable& t, const std::vector<LabelIndex>& word);
LabelSet word_product(const MultiTable& t, const std::vector<std::string>& word);

LabelIndex inverse_of(const MultiTable& t, LabelIndex u);
LabelSet set_inverse(const MultiTable& t, const LabelSet& x);

// Sub-table on `keep`. Throws ClosureViolation unless `keep` contains the
// zero label, is closed under inverses and under products.
MultiTable restrict_to(const MultiTable& t, const LabelSet& keep);

struct CellDiff {
  std::string left;
  std::string right;
  std::optional<Cell> expected;  // nullopt when the pair is missing
  std::optional<Cell> actual;
  std::vector<std::string> expected_ids;
  std::vector<std::string> actual_ids;
};

// Cell-by-cell comparison keyed by label id. Throws AlphabetMismatch when the
// two alphabets differ as signed sets with inverses.
std::vector<CellDiff> compare_tables(const MultiTable& expected, const MultiTable& actual);

}  // namespace isolab
