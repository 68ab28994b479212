#pragma once

#include <filesystem>

#include "isolab/table_io.hpp"
#include "isolab/typed.hpp"

namespace isolab {

// {"sorts": [...], "labels": [...], "mu": [{"from","to","labels"}],
//  "products": [{"from","via","to","left","right","result"}]}
// Pairs absent from "mu" are empty. Products with a zero factor may be
// omitted and then follow the unit law.
TypedTable typed_from_json(const Json& doc);
Json typed_to_json(const TypedTable& t);

// {"sorts": [...], "components": {sort: table document or path},
//  "cross_labels": [{"id","sign","inverse","from","to"}],
//  "cross_products": [...]}. Relative component paths resolve against `base`.
JoinSpec join_spec_from_json(const Json& doc, const std::filesystem::path& base = {});

}  // namespace isolab
