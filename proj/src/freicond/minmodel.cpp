#include "freicond/minmodel.hpp"

#include "freicond/solutions.hpp"

namespace freicond {

namespace {

// Next k-combination of positions over [0, m) in lexicographic order.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t m) {
  const auto k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < m) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

MinModelResult exact_min_model(const IntSet& a, const PolySystem& p,
                               std::uint32_t env_cap, const Budget& budget,
                               unsigned vertex_cap) {
  if (a.card() > vertex_cap)
    throw budget_error("min-model search vertices", Int(a.card()),
                       Int(vertex_cap));
  SolutionHypergraph ga = build_hypergraph(a, p, budget);
  const auto k = static_cast<std::uint32_t>(a.card());
  const Int per_candidate = int_pow(Int(k), p.arity());

  Int evals_used = 0;
  for (std::uint32_t r = 1; r <= env_cap; ++r) {
    const std::uint32_t m = 2 * r - 1;  // window [-(r-1), r-1]
    if (m < k) continue;
    std::vector<std::uint32_t> comb(k);
    for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
    do {
      // Subsets with env < r were already covered at a smaller r and cannot
      // match now, so only boundary-touching subsets need testing.
      if (comb.front() != 0 && comb.back() != m - 1) continue;
      std::vector<Int> vals;
      vals.reserve(k);
      for (auto ci : comb) vals.push_back(Int(ci) - (r - 1));
      IntSet c(std::move(vals));
      evals_used += per_candidate;
      budget.charge_tuples(evals_used, "min-model candidate enumeration");
      SolutionHypergraph gc = build_hypergraph(c, p, budget);
      if (gc.edges.size() != ga.edges.size()) continue;
      auto iso = hypergraph_isomorphic(ga, gc, vertex_cap);
      if (iso) return MinModelResult{std::move(c), std::move(*iso), Int(r)};
    } while (next_combination(comb, m));
  }
  throw budget_error("min-model search: no witness within the envelope cap",
                     Int(env_cap) + 1, Int(env_cap));
}

}  // namespace freicond
