#include "isolab/random_tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "isolab/errors.hpp"
#include "isolab/relational.hpp"

namespace isolab {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

using Map = std::vector<std::size_t>;

// closure of gens ∪ {id} under composition, or empty when it grows past cap
std::vector<Map> closure(const std::vector<Map>& gens, std::size_t degree, std::size_t cap) {
  Map id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Map> elems{id};
  std::map<Map, std::size_t> seen{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Map h(degree);
      for (std::size_t x = 0; x < degree; ++x) h[x] = g[elems[i][x]];
      if (seen.emplace(h, elems.size()).second) {
        elems.push_back(h);
        if (elems.size() > cap) return {};
      }
    }
  }
  return elems;
}

}  // namespace

CayleyTable random_group(Rng& rng) {
  switch (pick(rng, 0, 6)) {
    case 0:
      return cyclic_group(pick(rng, 1, 8));
    case 1:
      return klein_four_group();
    case 2:
      return dihedral_group(pick(rng, 3, 4));
    case 3:
      return direct_product(cyclic_group(2), cyclic_group(pick(rng, 2, 4)));
    case 4:
      return cyclic_group(pick(rng, 2, 4));
    case 5:
      return direct_product(cyclic_group(2), klein_four_group());
    default:
      return cyclic_group(1);
  }
}

MultiTable random_monoid(Rng& rng, std::size_t max_size, Sign side, bool proper_ideal) {
  if (max_size == 0 || side == Sign::zero) throw BadParams("bad monoid request");
  std::vector<Map> elems;
  for (int attempt = 0; attempt < 1000 && elems.empty(); ++attempt) {
    const std::size_t degree = pick(rng, 1, 3);
    const std::size_t ngens = pick(rng, 0, 2);
    std::vector<Map> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
      Map m(degree);
      for (auto& x : m) x = pick(rng, 0, degree - 1);
      if (proper_ideal) {
        std::vector<bool> hit(degree, false);
        for (auto x : m) hit[x] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) continue;
      }
      gens.push_back(std::move(m));
    }
    elems = closure(gens, degree, max_size);
  }
  if (elems.empty()) elems = closure({}, 1, 1);
  const std::size_t n = elems.size();
  const std::size_t degree = elems.front().size();
  std::map<Map, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at.emplace(elems[i], i);

  std::vector<std::string> ids(n);
  std::vector<LabelDecl> decls;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      ids[i] = "0";
      decls.push_back({"0", Sign::zero, {}});
    } else if (side == Sign::negative) {
      ids[i] = "-" + std::to_string(i);
      decls.push_back({ids[i], Sign::negative, {}});
    } else {
      ids[i] = std::to_string(i);
      decls.push_back({ids[i], Sign::positive, ids[i]});
    }
  }
  SignedAlphabet a(std::move(decls));
  TableBuilder b(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Map h(degree);
      for (std::size_t x = 0; x < degree; ++x) h[x] = elems[j][elems[i][x]];
      b.set(i, j, a.singleton(at.at(h)));
    }
  }
  return b.build();
}

namespace {

std::vector<std::vector<std::size_t>> random_transitive_generators(Rng& rng, std::size_t& m) {
  std::vector<std::vector<std::size_t>> gens;
  const std::size_t kind = pick(rng, 0, 3);
  if (kind == 3) {
    // imprimitive: blocks of size s, cycled as a whole and rotated inside block 0
    const std::size_t blocks = pick(rng, 2, 3), size = pick(rng, 2, 3);
    m = blocks * size;
    std::vector<std::size_t> shift(m), inner(m);
    for (std::size_t i = 0; i < blocks; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        shift[i * size + j] = ((i + 1) % blocks) * size + j;
        inner[i * size + j] = i == 0 ? (j + 1) % size : i * size + j;
      }
    gens = {shift, inner};
    return gens;
  }
  m = pick(rng, 2, 7);
  std::vector<std::size_t> cycle(m);
  for (std::size_t i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
  gens.push_back(cycle);
  if (kind == 1) {
    std::vector<std::size_t> refl(m);
    for (std::size_t i = 0; i < m; ++i) refl[i] = (m - i) % m;
    gens.push_back(refl);
  } else if (kind == 2) {
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    gens.push_back(p);
  }
  return gens;
}

}  // namespace

MultiTable random_orbital_table(Rng& rng) {
  std::size_t m = 0;
  auto gens = random_transitive_generators(rng, m);
  return derive_table(orbital_structure(m, gens)).to_table();
}

MultiTable random_valid_table(Rng& rng) {
  switch (pick(rng, 0, 3)) {
    case 0:
      return group_table(random_group(rng));
    case 1:
      return band_compose(random_monoid(rng, 6, Sign::negative, true), group_table(random_group(rng)));
    case 2:
      return random_orbital_table(rng);
    default: {
      std::size_t m = 0;
      auto gens = random_transitive_generators(rng, m);
      if (m > 4) {
        m = 3;
        gens = {{1, 2, 0}};
      }
      return derive_table(dense_order_structure(5, orbital_structure(m, gens))).to_table();
    }
  }
}

}  // namespace isolab
