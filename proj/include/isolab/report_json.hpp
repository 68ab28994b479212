#pragma once

#include <string>
#include <vector>

#include "isolab/analysis.hpp"
#include "isolab/axioms.hpp"
#include "isolab/relational.hpp"
#include "isolab/table_io.hpp"
#include "isolab/typed.hpp"

namespace isolab {

// Structured and plain-text renderings shared by the CLI and the tests. JSON
// member order is fixed so equal inputs give byte-identical output.

Json set_to_json(const SignedAlphabet& a, const LabelSet& s);

Json report_to_json(const SignedAlphabet& a, const ValidationReport& r);
std::string report_to_text(const SignedAlphabet& a, const ValidationReport& r);

Json classify_to_json(const RelationClass& c);
Json sop_to_json(const SignedAlphabet& a, const std::optional<SopWitness>& w);
Json special_to_json(const SignedAlphabet& a, const SpecialResult& r);
Json powerful_to_json(const SignedAlphabet& a, const PowerfulResult& r);
Json lattice_to_json(const SignedAlphabet& a, const RestrictionLattice& l);

Json diff_to_json(const std::vector<CellDiff>& diffs);
std::string diff_to_text(const std::vector<CellDiff>& diffs);

Json notes_to_json(const std::vector<DerivationNote>& notes);

Json typed_analysis_to_json(const TypedTable& t, const TypedAnalysis& a);

}  // namespace isolab
