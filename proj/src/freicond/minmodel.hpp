// Exact minimal-envelope model search: the smallest R such that some
// card(A)-subset of [-(R-1), R-1] has a solution hypergraph isomorphic to
// that of A, found by exhaustive enumeration in a fixed deterministic order
// (increasing R, then lexicographic subset order).
#pragma once

#include "freicond/hypergraph_iso.hpp"
#include "freicond/intset.hpp"
#include "freicond/polysystem.hpp"

namespace freicond {

struct MinModelResult {
  IntSet model;
  MapTable map;  // vertex bijection from A onto the model
  Int env_star;
};

MinModelResult exact_min_model(const IntSet& a, const PolySystem& p,
                               std::uint32_t env_cap,
                               const Budget& budget = {},
                               unsigned vertex_cap = 8);

}  // namespace freicond
