#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isolab/analysis.hpp"
#include "isolab/axioms.hpp"
#include "isolab/table.hpp"

namespace isolab {

using SortIndex = std::size_t;

// (p, u, q): label u read from sort p to sort q.
struct TypedTriple {
  SortIndex from;
  LabelIndex label;
  SortIndex to;
};

// A set of triples sharing their end sorts.
struct TypedSet {
  SortIndex from;
  SortIndex to;
  LabelSet labels;
};

struct TypedCell {
  LabelSet labels;
  bool infinite = false;
};

// Multiplication table of a many-sorted structure. Labels live in one global
// alphabet and μ(p, q) says which of them connect sort p to sort q. Products
// are only defined between triples whose middle sorts agree.
class TypedTable {
 public:
  using Key = std::array<std::size_t, 5>;  // p, u, q, v, r

  TypedTable(std::vector<std::string> sorts, SignedAlphabet alphabet, std::vector<LabelSet> mu,
             std::map<Key, TypedCell> products);

  const std::vector<std::string>& sorts() const { return sorts_; }
  std::size_t sort_count() const { return sorts_.size(); }
  SortIndex sort_index(std::string_view name) const;
  const SignedAlphabet& alphabet() const { return alphabet_; }
  const LabelSet& mu(SortIndex p, SortIndex q) const;

  // nullptr when undefined: middle sorts differ or no value was supplied.
  // Throws UnknownLabel when a label is outside its μ-set.
  const TypedCell* product(const TypedTriple& x, const TypedTriple& y) const;
  const std::map<Key, TypedCell>& products() const { return products_; }

 private:
  std::vector<std::string> sorts_;
  SignedAlphabet alphabet_;
  std::vector<LabelSet> mu_;
  std::map<Key, TypedCell> products_;
};

// Union over member pairs; nullopt when X ends in a different sort than Y
// starts. Throws MissingProduct for a composable pair without a value.
std::optional<TypedSet> typed_set_product(const TypedTable& t, const TypedSet& x,
                                          const TypedSet& y);

struct CrossLabel {
  std::string id;
  Sign sign = Sign::positive;
  std::string inverse;
  std::string from;
  std::string to;
};

struct CrossProduct {
  std::string from;
  std::string via;
  std::string to;
  std::string left;
  std::string right;
  std::vector<std::string> result;
};

struct JoinSpec {
  std::vector<std::string> sorts;
  std::vector<MultiTable> components;  // one per sort, same order
  std::vector<CrossLabel> cross_labels;
  std::vector<CrossProduct> cross_products;
};

// Diagonal products come from the components, products with a zero factor
// from the unit law, everything else from cross_products. Throws
// RegularityViolation when the μ-family would not be regular and
// MissingProduct when a composable pair has no value.
TypedTable join_build(const JoinSpec& spec);

// One-sort wrapping of an untyped table.
TypedTable single_sort(const MultiTable& t, std::string sort = "p");

// The restriction to μ(p, p) as an untyped table.
MultiTable diagonal(const TypedTable& t, SortIndex p);

// Typed forms of A1-A8 plus regularity and definedness. Composable chains
// are scanned in order of sorts, then labels.
ValidationReport validate_ir_structure(const TypedTable& t);

struct SortAnalysis {
  std::string sort;
  RelationClass relation;
  LabelSet core;  // over the global alphabet
};

struct TypedAnalysis {
  std::vector<SortAnalysis> sorts;
  RelationClass overall;
  LabelSet deterministic;  // u >= 0 with (q,u⁻¹,p)(p,u,q) = {(q,0,q)}
  bool deterministic_closed = true;
  LabelSet group_core;     // deterministic u whose inverse is deterministic
  bool join_of_groups = false;
};

TypedAnalysis typed_analysis(const TypedTable& t);

}  // namespace isolab
