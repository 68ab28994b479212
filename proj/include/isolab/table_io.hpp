#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "isolab/table.hpp"

namespace isolab {

using Json = nlohmann::ordered_json;

// Table documents come in two shapes:
//   {"labels": [...], "products": [...]}   explicit table
//   {"rule": {"name": ..., "window": N}}    rule-generated table
// Product entries may carry "infinite" and "truncated" flags; an empty
// "result" is only allowed on truncated entries.
MultiTable table_from_json(const Json& doc, std::optional<std::size_t> window = std::nullopt);
Json table_to_json(const MultiTable& t);

std::vector<LabelDecl> labels_from_json(const Json& labels);
Json labels_to_json(const SignedAlphabet& a);

// Throws LoadError for unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
MultiTable load_table(const std::filesystem::path& path,
                      std::optional<std::size_t> window = std::nullopt);

}  // namespace isolab
