#include "freicond/solutions.hpp"

#include <algorithm>

namespace freicond {

SolutionSet::SolutionSet(IntSet ground, std::uint32_t arity,
                         std::vector<std::vector<std::uint32_t>> tuples)
    : ground_(std::move(ground)), arity_(arity), tuples_(std::move(tuples)) {
  for (const auto& t : tuples_) {
    if (t.size() != arity_) throw input_error("solution tuple arity mismatch");
    for (auto i : t)
      if (i >= ground_.card())
        throw input_error("solution tuple index out of range");
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool SolutionSet::contains(const std::vector<std::uint32_t>& t) const {
  return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

std::vector<Int> SolutionSet::labels(std::uint64_t i) const {
  std::vector<Int> out;
  out.reserve(arity_);
  for (auto idx : tuples_[i]) out.push_back(ground_[idx]);
  return out;
}

bool next_index_tuple(std::vector<std::uint32_t>& tuple, std::uint32_t base) {
  for (std::size_t pos = tuple.size(); pos-- > 0;) {
    if (++tuple[pos] < base) return true;
    tuple[pos] = 0;
  }
  return false;
}

SolutionSet solution_set(const IntSet& a, const PolySystem& p,
                         const Budget& budget) {
  const std::uint32_t s = p.arity();
  budget.charge_tuples(int_pow(Int(a.card()), s), "solution enumeration card^s");

  std::vector<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> idx(s, 0);
  std::vector<Int> point(s);
  do {
    for (std::uint32_t j = 0; j < s; ++j) point[j] = a[idx[j]];
    if (p.all_vanish(point)) found.push_back(idx);
  } while (next_index_tuple(idx, static_cast<std::uint32_t>(a.card())));
  return SolutionSet(a, s, std::move(found));
}

SolutionHypergraph build_hypergraph(const IntSet& a, const PolySystem& p,
                                    const Budget& budget) {
  return SolutionHypergraph{a, solution_set(a, p, budget)};
}

}  // namespace freicond
