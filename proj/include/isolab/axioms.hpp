#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isolab/table.hpp"

namespace isolab {

enum class Axiom {
  unit,            // A1
  neg_absorption,  // A2
  pos_closure,     // A3
  inverse,         // A4
  anti_hom,        // A5
  semi_assoc,      // A6
  strictness,      // A7
  determinism,     // A8
};

struct AxiomInfo {
  Axiom axiom;
  std::string id;
  std::size_t arity;  // length of an instance tuple
  std::string description;
};

const std::vector<AxiomInfo>& axiom_catalogue();
const AxiomInfo& axiom_info(Axiom a);

enum class CheckStatus { pass, fail, skipped_window };
std::string_view to_string(CheckStatus s);

// A named evaluated set, e.g. {"(u1·u2)·u3", {...}}.
struct NamedSet {
  std::string name;
  LabelSet labels;
};

struct Witness {
  std::vector<LabelIndex> labels;
  std::vector<NamedSet> sets;
  std::string detail;
};

struct CheckResult {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::pass;
  // Passed without any instance meeting the axiom's hypothesis.
  bool vacuous = false;
  std::size_t instances = 0;  // instances where the hypothesis applied
  std::size_t skipped = 0;    // of those, left undecided by the window
  std::optional<Witness> witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;

  bool passed() const;  // no failing check
  CheckStatus overall() const;
  const CheckResult& check(std::string_view id) const;
};

// Scans every instance of A1-A8 in declared label order. The witness of a
// failing check is the lexicographically first violating tuple.
ValidationReport validate_i_groupoid(const MultiTable& t);

enum class InstanceOutcome { holds, violated, skipped, not_applicable };

// Evaluates one instance of an axiom. When `w` is non-null and the instance
// is violated, it is filled with the evaluated sets.
InstanceOutcome evaluate_instance(const MultiTable& t, Axiom a, std::span<const LabelIndex> tuple,
                                  Witness* w = nullptr);

// Non-negative labels u with u⁻¹·u = {0}.
LabelSet deterministic_labels(const MultiTable& t);

enum class AssocRelation { equal, strict_left_inclusion, violation, skipped };
std::string_view to_string(AssocRelation r);

struct AssocEntry {
  LabelIndex u1, u2, u3;
  AssocRelation relation;
};

struct AssociativityProfile {
  std::vector<AssocEntry> entries;  // all |U|³ triples in declared order
  std::size_t equal = 0;
  std::size_t strict = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  // Every triple with a non-negative first factor is an equality.
  bool nonnegative_associativity = true;
};

AssociativityProfile associativity_profile(const MultiTable& t);

struct SignLemmaResult {
  bool passed = true;
  LabelSet product;
  std::string detail;
};

// A word with a negative letter multiplies into U⁻. A word of non-negative
// letters multiplies into U^{>=0} and the inverse of its product is the
// product of the reversed word of inverses.
SignLemmaResult sign_lemma_check(const MultiTable& t, const std::vector<LabelIndex>& word);

}  // namespace isolab
