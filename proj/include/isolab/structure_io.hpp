#pragma once

#include <filesystem>

#include "isolab/relational.hpp"
#include "isolab/table_io.hpp"

namespace isolab {

// {"universe": [int], "relations": {label: [[a, b], ...]}, "window": [int]}
// with optional "signs": {label: "neg"|"zero"|"pos"}, "inverses":
// {label: label} and "zero": label. Relation order is declaration order.
RelationalStructure structure_from_json(const Json& doc);
Json structure_to_json(const RelationalStructure& s);
RelationalStructure load_structure(const std::filesystem::path& path);

}  // namespace isolab
