#include "freicond/hypergraph_iso.hpp"

#include <algorithm>

namespace freicond {

namespace {

// Count of (edge, position) incidences per vertex and position. A bijection
// that maps edge tuples coordinatewise preserves this profile exactly.
std::vector<std::vector<std::uint32_t>> incidence_profile(
    const SolutionHypergraph& g) {
  const auto n = g.vertices.card();
  const auto s = g.edges.arity();
  std::vector<std::vector<std::uint32_t>> prof(
      n, std::vector<std::uint32_t>(s, 0));
  for (const auto& e : g.edges.tuples())
    for (std::uint32_t pos = 0; pos < s; ++pos) ++prof[e[pos]][pos];
  return prof;
}

bool mapped_edges_match(const SolutionHypergraph& g1,
                        const SolutionHypergraph& g2,
                        const std::vector<std::uint32_t>& img) {
  std::vector<std::vector<std::uint32_t>> mapped;
  mapped.reserve(g1.edges.size());
  for (const auto& e : g1.edges.tuples()) {
    std::vector<std::uint32_t> m(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) m[j] = img[e[j]];
    mapped.push_back(std::move(m));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == g2.edges.tuples();
}

}  // namespace

std::optional<MapTable> hypergraph_isomorphic(const SolutionHypergraph& g1,
                                              const SolutionHypergraph& g2,
                                              unsigned vertex_cap) {
  if (g1.vertices.card() > vertex_cap || g2.vertices.card() > vertex_cap)
    throw budget_error(
        "hypergraph isomorphism vertices",
        Int(std::max(g1.vertices.card(), g2.vertices.card())),
        Int(vertex_cap));
  if (g1.edges.arity() != g2.edges.arity()) return std::nullopt;
  if (g1.vertices.card() != g2.vertices.card()) return std::nullopt;
  if (g1.edges.size() != g2.edges.size()) return std::nullopt;

  const auto n = static_cast<std::uint32_t>(g1.vertices.card());
  auto prof1 = incidence_profile(g1);
  auto prof2 = incidence_profile(g2);
  {
    auto m1 = prof1, m2 = prof2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return std::nullopt;
  }

  // Backtrack assigning images of vertices 0..n-1 in ascending index order;
  // the first complete valid assignment is the lexicographically least.
  std::vector<std::uint32_t> img(n, 0);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::uint32_t v) -> bool {
    if (v == n) return mapped_edges_match(g1, g2, img);
    for (std::uint32_t w = 0; w < n; ++w) {
      if (used[w] || prof1[v] != prof2[w]) continue;
      img[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  std::vector<std::pair<Int, Int>> entries;
  for (std::uint32_t v = 0; v < n; ++v)
    entries.emplace_back(g1.vertices[v], g2.vertices[img[v]]);
  return MapTable::single(std::move(entries));
}

bool hypergraph_iso_valid(const SolutionHypergraph& g1,
                          const SolutionHypergraph& g2, const MapTable& psi) {
  if (g1.vertices.card() != g2.vertices.card()) return false;
  if (g1.edges.arity() != g2.edges.arity()) return false;
  if (!psi.covers(g1.vertices)) return false;
  std::vector<std::uint32_t> img(g1.vertices.card());
  for (std::uint64_t v = 0; v < g1.vertices.card(); ++v) {
    Int y = psi.apply(g1.vertices[v]);
    if (!g2.vertices.contains(y)) return false;
    img[v] = static_cast<std::uint32_t>(g2.vertices.index_of(y));
  }
  std::vector<bool> seen(g2.vertices.card(), false);
  for (auto w : img) {
    if (seen[w]) return false;
    seen[w] = true;
  }
  return mapped_edges_match(g1, g2, img);
}

}  // namespace freicond
