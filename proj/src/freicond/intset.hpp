// Finite nonempty sets of integers with the diameter and envelope measures.
#pragma once

#include <cstdint>
#include <vector>

#include "freicond/errors.hpp"
#include "freicond/ints.hpp"

namespace freicond {

struct Measures {
  Int card;
  Int diam;  // max - min + 1
  Int env;   // max |a| + 1
};

class IntSet {
 public:
  // Sorts and deduplicates. Rejects the empty set.
  explicit IntSet(std::vector<Int> values);

  std::uint64_t card() const { return elems_.size(); }
  const Int& min() const { return elems_.front(); }
  const Int& max() const { return elems_.back(); }
  Int diam() const { return max() - min() + 1; }
  Int env() const;
  Measures measures() const { return {Int(card()), diam(), env()}; }

  const Int& operator[](std::uint64_t i) const { return elems_[i]; }
  const std::vector<Int>& values() const { return elems_; }
  bool contains(const Int& v) const;
  // Index of v in the sorted order; throws input_error if absent.
  std::uint64_t index_of(const Int& v) const;

  IntSet translated(const Int& delta) const;
  // Dilation by a nonzero factor.
  IntSet scaled(const Int& factor) const;

  bool operator==(const IntSet&) const = default;

 private:
  std::vector<Int> elems_;
};

}  // namespace freicond
