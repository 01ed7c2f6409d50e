// Explicit maps used as isomorphism witnesses: either a plain bijection on a
// set of integers, or a t_fold table keyed by t-tuples whose domain must be a
// full cartesian power.
#pragma once

#include <cstdint>
#include <vector>

#include "freicond/intset.hpp"

namespace freicond {

class MapTable {
 public:
  enum class Kind { single, t_fold };

  // Keys must be distinct and values pairwise distinct (the table is a
  // bijection onto its image).
  static MapTable single(std::vector<std::pair<Int, Int>> entries);
  // Keys are t-tuples; the key set must be the full power B^t of the base
  // set B formed by all key coordinates.
  static MapTable t_fold(std::uint32_t t,
                         std::vector<std::pair<std::vector<Int>, Int>> entries);
  static MapTable identity(const IntSet& a);

  Kind kind() const { return kind_; }
  std::uint32_t fold() const { return fold_; }  // 1 for single tables
  std::uint64_t size() const { return keys_.size(); }

  const std::vector<std::vector<Int>>& keys() const { return keys_; }
  const std::vector<Int>& values() const { return values_; }

  // single tables only.
  const Int& apply(const Int& key) const;
  bool covers(const IntSet& a) const;
  IntSet domain_set() const;

  const Int& apply_tuple(const std::vector<Int>& key) const;
  // Base set B of a t_fold table (keys are exactly B^t).
  IntSet base_set() const;

  IntSet image_set() const;
  // this(other(x)): other's image must be covered by this table's domain.
  MapTable compose_after(const MapTable& inner) const;

  bool operator==(const MapTable&) const = default;

 private:
  MapTable() = default;
  std::uint64_t find(const std::vector<Int>& key) const;

  Kind kind_ = Kind::single;
  std::uint32_t fold_ = 1;
  std::vector<std::vector<Int>> keys_;  // sorted lexicographically
  std::vector<Int> values_;             // aligned with keys_
};

}  // namespace freicond
