#pragma once

#include <random>

#include "isolab/constructions.hpp"
#include "isolab/table.hpp"

namespace isolab {

using Rng = std::mt19937_64;

// One of the small groups up to order 8: cyclic, Klein, dihedral, products.
CayleyTable random_group(Rng& rng);

// Monoid of maps on a small set generated by random transformations,
// at most max_size elements. Labels are -1, -2, ... for Sign::negative and
// 1, 2, ... (declared self-inverse) for Sign::positive. With
// `proper_ideal`, no product of non-units is the unit.
MultiTable random_monoid(Rng& rng, std::size_t max_size, Sign side, bool proper_ideal = false);

// Orbital table of a random transitive permutation group of degree <= 7.
MultiTable random_orbital_table(Rng& rng);

// A table satisfying A1-A8, drawn from groups, glued negative monoids,
// orbital tables and stacked orbital blocks.
MultiTable random_valid_table(Rng& rng);

}  // namespace isolab
