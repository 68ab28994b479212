#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "isolab/label_set.hpp"

namespace isolab {

enum class Sign { negative, zero, positive };

std::string_view to_string(Sign s);
Sign parse_sign(std::string_view s);  // "neg" | "zero" | "pos"

struct LabelDecl {
  std::string id;
  Sign sign = Sign::positive;
  std::string inverse;  // empty for negatives; defaults to id for the zero label
};

// Finite signed label set with a distinguished unit and an inverse
// involution on the non-negative labels. Order of declaration is kept and
// used for every deterministic enumeration.
class SignedAlphabet {
 public:
  SignedAlphabet() = default;
  explicit SignedAlphabet(std::vector<LabelDecl> decls);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(LabelIndex i) const { return ids_.at(i); }
  Sign sign(LabelIndex i) const { return signs_.at(i); }
  LabelIndex zero() const { return zero_; }

  std::optional<LabelIndex> find(std::string_view id) const;
  LabelIndex index(std::string_view id) const;  // throws UnknownLabel

  bool has_inverse(LabelIndex i) const { return inverse_.at(i).has_value(); }
  LabelIndex inverse(LabelIndex i) const;  // throws NoInverse for negatives

  bool is_negative(LabelIndex i) const { return signs_.at(i) == Sign::negative; }
  bool is_positive(LabelIndex i) const { return signs_.at(i) == Sign::positive; }
  bool is_nonnegative(LabelIndex i) const { return !is_negative(i); }
  bool is_nonpositive(LabelIndex i) const { return !is_positive(i); }

  LabelSet empty_set() const { return LabelSet(size()); }
  LabelSet all() const { return LabelSet::full(size()); }
  LabelSet singleton(LabelIndex i) const { return LabelSet::singleton(size(), i); }
  LabelSet negatives() const;
  LabelSet positives() const;
  LabelSet nonnegatives() const;
  LabelSet nonpositives() const;
  LabelSet set_of(const std::vector<std::string>& ids) const;

  std::vector<std::string> ids_of(const LabelSet& s) const;
  std::vector<LabelDecl> decls() const;

  friend bool operator==(const SignedAlphabet& a, const SignedAlphabet& b) {
    return a.ids_ == b.ids_ && a.signs_ == b.signs_ && a.inverse_ == b.inverse_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<Sign> signs_;
  std::vector<std::optional<LabelIndex>> inverse_;
  std::unordered_map<std::string, LabelIndex> by_id_;
  LabelIndex zero_ = 0;
};

// "{a, b, c}" in declared order.
std::string format_set(const SignedAlphabet& a, const LabelSet& s);

}  // namespace isolab
