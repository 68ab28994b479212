#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isolab/constructions.hpp"
#include "isolab/table.hpp"

namespace isolab {

using Element = std::int64_t;

// A finite structure whose binary relations Q_u are labelled by the
// alphabet. The relations are pairwise disjoint and the zero label's
// relation is the identity. Products are read off at sources in `window`.
struct RelationalStructure {
  std::vector<Element> universe;
  std::vector<std::string> labels;  // declared order
  std::vector<std::vector<std::pair<Element, Element>>> relations;  // parallel to labels
  std::vector<Element> window;
  // Optional sign and inverse declarations; missing ones are inferred:
  // u is non-negative with inverse w when 0 ∈ u·w, and negative otherwise.
  std::map<std::string, Sign> signs;
  std::map<std::string, std::string> inverses;
  std::string zero = "0";
};

// Throws StructureError, IdentityMissing or EmptyWindow.
void check_structure(const RelationalStructure& s);

enum class Semantics {
  // v ∈ u1·u2 iff some window source a has (a,b) ∈ Q_u1, (b,c) ∈ Q_u2 and
  // (a,c) ∈ Q_v
  existential,
  // v ∈ u1·u2 iff Q_v meets the window and every (a,c) ∈ Q_v with a in the
  // window is such a composite
  universal,
};

enum class DerivedStatus {
  complete,   // every composite pair carries a label of the alphabet
  truncated,  // some composite pair has no label: the value leaves the window
  empty,      // no composite pair starts in the window
};

std::string_view to_string(DerivedStatus s);

struct DerivedCell {
  LabelSet labels;
  DerivedStatus status = DerivedStatus::complete;
  // (a, b, c) with a in the window, one per member, parallel to `labels`
  std::vector<std::array<Element, 3>> witnesses;
};

struct DerivedTable {
  SignedAlphabet alphabet;
  std::vector<DerivedCell> cells;  // n*n, row major
  Semantics semantics = Semantics::existential;

  const DerivedCell& cell(LabelIndex u, LabelIndex v) const {
    return cells.at(u * alphabet.size() + v);
  }
  // Truncated cells become window-exceeding cells. Throws EmptyProduct when
  // some cell is empty.
  MultiTable to_table() const;
};

DerivedTable derive_table(const RelationalStructure& s,
                          Semantics semantics = Semantics::existential);

// True when (a, b, c) really composes u1, u2 into v in s.
bool witness_holds(const RelationalStructure& s, const std::string& u1, const std::string& u2,
                   const std::string& v, const std::array<Element, 3>& w);

// Finite generators. Windows keep every composite of two labels away from
// the boundary.
RelationalStructure chain_structure(std::size_t n);  // labels 0 (=), 1 (<), 2 (>)
RelationalStructure path_structure(std::size_t n, std::size_t max_label);
RelationalStructure tree_structure(std::size_t degree, std::size_t radius, std::size_t max_label);
RelationalStructure cayley_structure(const CayleyTable& g);
// n copies of a homogeneous block stacked along a strict order: "-1" relates
// every element to every element of a later copy, block relations act inside
// each copy.
RelationalStructure dense_order_structure(std::size_t n, const RelationalStructure& block);
RelationalStructure dense_order_structure(std::size_t n, const CayleyTable& g);
RelationalStructure successor_structure(std::size_t n, std::size_t max_shift);
// Orbitals of the permutation group generated by `gens` on {0..m-1}; the
// group must be transitive. Labels are 0 for the diagonal, then r1, r2, ...
RelationalStructure orbital_structure(std::size_t m,
                                      const std::vector<std::vector<std::size_t>>& gens);

struct StructureParams {
  std::size_t n = 10;
  std::size_t degree = 3;
  std::size_t radius = 12;
  std::size_t max_label = 5;
  CayleyTable group = cyclic_group(2);
};

// kind: chain, path, tree, cayley, thm52, successor.
RelationalStructure generate_structure(std::string_view kind, const StructureParams& p);

// Existential derivation compared cell by cell with `expected`. Throws
// AlphabetMismatch when the label sets differ.
std::vector<CellDiff> oracle_vs_table(const RelationalStructure& s, const MultiTable& expected);

struct DerivationNote {
  std::string kind;
  std::string left;
  std::string right;
  std::vector<std::string> derived;
  std::vector<std::string> expected;
};

// For numerically labelled distance structures: complete cells m·n with
// m+n inside the alphabet compared against {m+n, |m-n|}. Empty unless every
// numeric label is self-inverse.
std::vector<DerivationNote> distance_notes(const DerivedTable& d);

}  // namespace isolab
