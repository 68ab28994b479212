#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isolab/table.hpp"

namespace isolab {

// Windowed tables generated from closed-form product rules. The window bounds
// the label magnitude; values that reach past it are marked in their cells.

// Additive monoid {0, -1, -2, ...}: (-m)(-n) = {-(m+n)}.
MultiTable omega_star_table(std::size_t window);

// Distance labels on the infinite line: m·n = {m+n, |m-n|}.
MultiTable line_graph_table(std::size_t window);

// Shifts on the integers, labels 0, s+k, s-k: s(m)·s(n) = {s(m+n)}.
MultiTable z_successor_table(std::size_t window);

// A table with a strictly left semi-associative triple (u1,u2,u3): u2·u3 is
// infinite over the family u2, u3, w1, w2, ... and
// (u1·u2)·u3 = {u1, x, v} strictly contains u1·(u2·u3) = {u1, x}.
// The window is the number of visible w-labels.
MultiTable left_semi_assoc_table(std::size_t window);

// omega-star glued to the cyclic group of order 3 by band_compose.
MultiTable omega_star_band_z3(std::size_t window);

struct RuleEntry {
  std::string name;
  std::size_t default_window;
  MultiTable (*make)(std::size_t);
};

const std::vector<RuleEntry>& rule_registry();
std::optional<MultiTable> rule_table(std::string_view name, std::optional<std::size_t> window);

}  // namespace isolab
