// Exhaustive solution-set enumeration over cartesian powers of a ground set,
// and the solution hypergraph built from it. This enumeration is the reference
// oracle for everything else in the library, so it stays a plain loop.
#pragma once

#include <cstdint>
#include <vector>

#include "freicond/intset.hpp"
#include "freicond/polysystem.hpp"

namespace freicond {

// Solution tuples are stored as index tuples into the sorted ground set;
// label views are materialized on demand. Tuples are kept in lexicographic
// order (which coincides for indices and labels).
class SolutionSet {
 public:
  SolutionSet(IntSet ground, std::uint32_t arity,
              std::vector<std::vector<std::uint32_t>> tuples);

  const IntSet& ground() const { return ground_; }
  std::uint32_t arity() const { return arity_; }
  std::uint64_t size() const { return tuples_.size(); }
  const std::vector<std::vector<std::uint32_t>>& tuples() const {
    return tuples_;
  }
  bool contains(const std::vector<std::uint32_t>& index_tuple) const;
  std::vector<Int> labels(std::uint64_t i) const;

  bool operator==(const SolutionSet&) const = default;

 private:
  IntSet ground_;
  std::uint32_t arity_;
  std::vector<std::vector<std::uint32_t>> tuples_;
};

SolutionSet solution_set(const IntSet& a, const PolySystem& p,
                         const Budget& budget = {});

struct SolutionHypergraph {
  IntSet vertices;
  SolutionSet edges;

  bool operator==(const SolutionHypergraph&) const = default;
};

SolutionHypergraph build_hypergraph(const IntSet& a, const PolySystem& p,
                                    const Budget& budget = {});

// Advances an index odometer over [0, base)^width in lexicographic order.
// Returns false once the odometer wraps past the last tuple.
bool next_index_tuple(std::vector<std::uint32_t>& tuple, std::uint32_t base);

}  // namespace freicond
