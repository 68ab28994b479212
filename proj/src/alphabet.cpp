#include "isolab/alphabet.hpp"

#include "isolab/errors.hpp"

namespace isolab {

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::negative:
      return "neg";
    case Sign::zero:
      return "zero";
    case Sign::positive:
      return "pos";
  }
  return "?";
}

Sign parse_sign(std::string_view s) {
  if (s == "neg") return Sign::negative;
  if (s == "zero") return Sign::zero;
  if (s == "pos") return Sign::positive;
  throw InvalidAlphabet("unknown sign '" + std::string(s) + "'");
}

SignedAlphabet::SignedAlphabet(std::vector<LabelDecl> decls) {
  std::optional<LabelIndex> zero;
  for (auto& d : decls) {
    if (d.id.empty()) throw InvalidAlphabet("empty label id");
    auto [it, fresh] = by_id_.emplace(d.id, ids_.size());
    if (!fresh) throw InvalidAlphabet("duplicate label '" + d.id + "'");
    if (d.sign == Sign::zero) {
      if (zero) throw InvalidAlphabet("more than one zero label");
      zero = ids_.size();
    }
    ids_.push_back(d.id);
    signs_.push_back(d.sign);
  }
  if (!zero) throw InvalidAlphabet("no zero label");
  zero_ = *zero;

  inverse_.assign(ids_.size(), std::nullopt);
  for (LabelIndex i = 0; i < decls.size(); ++i) {
    const auto& d = decls[i];
    switch (d.sign) {
      case Sign::negative:
        if (!d.inverse.empty())
          throw InvalidAlphabet("negative label '" + d.id + "' declares an inverse");
        break;
      case Sign::zero:
        if (!d.inverse.empty() && d.inverse != d.id)
          throw InvalidAlphabet("zero label must be its own inverse");
        inverse_[i] = i;
        break;
      case Sign::positive: {
        if (d.inverse.empty())
          throw InvalidAlphabet("positive label '" + d.id + "' has no inverse");
        auto j = by_id_.find(d.inverse);
        if (j == by_id_.end())
          throw InvalidAlphabet("inverse '" + d.inverse + "' of '" + d.id + "' is not declared");
        if (decls[j->second].sign != Sign::positive)
          throw InvalidAlphabet("inverse of positive '" + d.id + "' must be positive");
        inverse_[i] = j->second;
        break;
      }
    }
  }
  for (LabelIndex i = 0; i < ids_.size(); ++i) {
    if (inverse_[i] && inverse_[*inverse_[i]] != i)
      throw InvalidAlphabet("inverse of '" + ids_[i] + "' is not an involution");
  }
}

std::optional<LabelIndex> SignedAlphabet::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

LabelIndex SignedAlphabet::index(std::string_view id) const {
  auto i = find(id);
  if (!i) throw UnknownLabel("unknown label '" + std::string(id) + "'");
  return *i;
}

LabelIndex SignedAlphabet::inverse(LabelIndex i) const {
  const auto& inv = inverse_.at(i);
  if (!inv) throw NoInverse("label '" + ids_[i] + "' is negative and has no inverse");
  return *inv;
}

LabelSet SignedAlphabet::negatives() const {
  LabelSet s(size());
  for (LabelIndex i = 0; i < size(); ++i)
    if (is_negative(i)) s.insert(i);
  return s;
}

LabelSet SignedAlphabet::positives() const {
  LabelSet s(size());
  for (LabelIndex i = 0; i < size(); ++i)
    if (is_positive(i)) s.insert(i);
  return s;
}

LabelSet SignedAlphabet::nonnegatives() const {
  LabelSet s(size());
  for (LabelIndex i = 0; i < size(); ++i)
    if (!is_negative(i)) s.insert(i);
  return s;
}

LabelSet SignedAlphabet::nonpositives() const {
  LabelSet s(size());
  for (LabelIndex i = 0; i < size(); ++i)
    if (!is_positive(i)) s.insert(i);
  return s;
}

LabelSet SignedAlphabet::set_of(const std::vector<std::string>& ids) const {
  LabelSet s(size());
  for (const auto& id : ids) s.insert(index(id));
  return s;
}

std::vector<std::string> SignedAlphabet::ids_of(const LabelSet& s) const {
  std::vector<std::string> out;
  for (auto i : s) out.push_back(ids_[i]);
  return out;
}

std::vector<LabelDecl> SignedAlphabet::decls() const {
  std::vector<LabelDecl> out;
  for (LabelIndex i = 0; i < size(); ++i) {
    LabelDecl d{ids_[i], signs_[i], {}};
    if (signs_[i] == Sign::positive) d.inverse = ids_[*inverse_[i]];
    out.push_back(std::move(d));
  }
  return out;
}

std::string format_set(const SignedAlphabet& a, const LabelSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s) {
    if (!first) out += ", ";
    out += a.id(i);
    first = false;
  }
  return out + "}";
}

}  // namespace isolab
