#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isolab/table.hpp"
#include "isolab/table_io.hpp"
#include "isolab/typed.hpp"

namespace isolab {

struct FixtureInfo {
  std::string name;
  std::string description;
  bool typed = false;
};

const std::vector<FixtureInfo>& fixture_list();

// Untyped fixture by name; rule-backed fixtures honour `window`.
std::optional<MultiTable> fixture_table(std::string_view name,
                                        std::optional<std::size_t> window = std::nullopt);
std::optional<TypedTable> fixture_typed(std::string_view name);

// The document `fixtures --emit` writes: rule reference or explicit table.
std::optional<Json> fixture_document(std::string_view name);

}  // namespace isolab
