#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isolab/axioms.hpp"
#include "isolab/table.hpp"

namespace isolab {

// Non-negative u with u⁻¹·u = {0}.
LabelSet deterministic_core(const MultiTable& t);

// Least superset of the core that contains u and u⁻¹ whenever
// u·u⁻¹ ∪ u⁻¹·u is finite and already inside it.
LabelSet almost_deterministic_closure(const MultiTable& t);

struct RelationClass {
  bool transitive = false;     // every product finite
  bool partial_order = false;  // transitive, no positive labels
  bool equivalence = false;    // transitive, no negative labels
};

RelationClass classify_relation(const MultiTable& t);

struct SopWitness {
  enum class Kind { direct_closure, power_closure };
  Kind kind = Kind::direct_closure;
  LabelIndex u = 0;   // direct closure: u ∈ X and u·(X ∪ {0}) ⊆ X ∪ {0}
  LabelSet x;         // the witnessing subset of U⁻
  std::size_t n = 0;  // power closure: X^{n+1} ⊆ X ∪ X² ∪ ... ∪ X^n
};

std::string_view to_string(SopWitness::Kind k);

struct SopOptions {
  std::size_t max_subset = 4;
  std::size_t max_power = 6;
};

// For a finite nonempty U⁻ the witness set is U⁻ itself: a singleton gives a
// direct-closure witness, a larger set a power-closure witness with the
// least n when one exists within max_power. Otherwise subsets of the visible
// negatives are searched by size, then in declared order. Throws
// WindowExceeded when nothing was found and some candidate could not be
// decided inside the window.
std::optional<SopWitness> sop_detect(const MultiTable& t, const SopOptions& opts = {});

// Re-evaluates the witness condition on the table.
bool sop_witness_holds(const MultiTable& t, const SopWitness& w);

// Negative u with u ∈ u·v for every v.
LabelSet pip_elements(const MultiTable& t);

struct SpecialWitness {
  std::vector<LabelIndex> word;  // negative letters
  LabelIndex v = 0;              // non-negative right factor
  LabelIndex u = 0;              // member of word·v not reached from the left
};

struct SpecialResult {
  bool passed = true;
  std::size_t words_checked = 0;
  std::optional<SpecialWitness> witness;
};

// Every u' in (u1·...·un)·v, v >= 0, also lies in v'·u1·...·un for some
// v' >= 0. Checks negative words of length 1..max_word. Throws
// EmptyNegativePart when U⁻ is empty.
SpecialResult special_check(const MultiTable& t, std::size_t max_word = 4);

struct PowerfulResult {
  enum class Approx { holds, violated, not_applicable };

  bool passed = true;        // conditions (2) and (3)
  bool no_zero_in_words = true;   // (2): no generator word multiplies to 0
  bool generators_meet = true;    // (3): u_i·v meets the generators for all v
  std::vector<LabelIndex> witness;  // labels behind the first failure
  std::string detail;
  Approx acl_approx = Approx::not_applicable;
  std::string acl_detail;
};

std::string_view to_string(PowerfulResult::Approx a);

// acl-approx is reported separately: no word of inverted generators of
// length <= max_word meets the almost deterministic labels other than 0.
PowerfulResult powerful_graph_check(const MultiTable& t, const LabelSet& generators,
                                    std::size_t max_word = 4);

struct LatticeNode {
  std::string id;
  std::string name;
  LabelSet labels;
};

// The eleven restrictions of a table ordered by inclusion. `structural` lists
// the covering pairs (lower, upper) of the generic diagram; `classes` groups
// nodes whose label sets coincide, and `hasse` is the covering relation
// between those classes.
struct RestrictionLattice {
  std::vector<LatticeNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> structural;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  std::size_t undecided_products = 0;  // closure checks skipped for the window

  std::size_t node(std::string_view id) const;
  bool includes(std::size_t lower, std::size_t upper) const;
};

// Throws ClosureViolation when a node is not closed under products or
// inverses, which can only happen for tables that fail validation.
RestrictionLattice restriction_lattice(const MultiTable& t);

std::string lattice_to_dot(const MultiTable& t, const RestrictionLattice& l);

}  // namespace isolab
