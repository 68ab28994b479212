#pragma once

#include <string>
#include <vector>

#include "isolab/table.hpp"

namespace isolab {

// A finite group given by its multiplication: rows[i][j] is the symbol of
// elements[i] * elements[j].
struct CayleyTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> rows;
};

CayleyTable cyclic_group(std::size_t n);  // 0, g, g2, ...
CayleyTable klein_four_group();           // 0, a, b, c
CayleyTable dihedral_group(std::size_t n);  // order 2n: r^i and s r^i
CayleyTable direct_product(const CayleyTable& g, const CayleyTable& h);

// Group multiplication as a deterministic table on non-negative labels. The
// identity is relabelled "0". Throws NotAGroup.
MultiTable group_table(const CayleyTable& g);

// {-1, 0} under saturating addition: (-1)·(-1) = {-1}.
MultiTable saturating_negative_monoid();

// Deterministic, unital and associative on every triple the window decides.
// On failure `why` (if given) says what broke.
bool is_monoid(const MultiTable& t, std::string* why = nullptr);

// Glues a monoid on non-positive labels to a monoid on non-negative labels
// sharing only the zero label. Across the two sides u·v = v·u = {u} for
// u < 0 < v. Negative labels must not multiply to zero. Throws SignMismatch,
// AlphabetOverlap or NotAMonoid.
MultiTable band_compose(const MultiTable& neg, const MultiTable& pos);

}  // namespace isolab
