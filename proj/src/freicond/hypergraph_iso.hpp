// Backtracking isomorphism search between solution hypergraphs on at most a
// handful of vertices. Intended scale is tiny; the pruning is a per-vertex
// positional incidence profile, which any isomorphism must preserve.
#pragma once

#include <optional>

#include "freicond/maptable.hpp"
#include "freicond/solutions.hpp"

namespace freicond {

// Lexicographically least vertex bijection (as image sequence over the first
// graph's sorted vertices) carrying the edge set of g1 exactly onto the edge
// set of g2, or nullopt. Throws input_error above the vertex cap.
std::optional<MapTable> hypergraph_isomorphic(const SolutionHypergraph& g1,
                                              const SolutionHypergraph& g2,
                                              unsigned vertex_cap = 8);

// Whether the given vertex map is itself a valid isomorphism from g1 to g2.
bool hypergraph_iso_valid(const SolutionHypergraph& g1,
                          const SolutionHypergraph& g2, const MapTable& psi);

}  // namespace freicond
