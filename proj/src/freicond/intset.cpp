#include "freicond/intset.hpp"

#include <algorithm>

namespace freicond {

IntSet::IntSet(std::vector<Int> values) : elems_(std::move(values)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty()) throw input_error("set must be nonempty");
}

Int IntSet::env() const {
  Int lo = abs(min());
  Int hi = abs(max());
  return (lo > hi ? lo : hi) + 1;
}

bool IntSet::contains(const Int& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::uint64_t IntSet::index_of(const Int& v) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
  if (it == elems_.end() || *it != v)
    throw input_error("element " + v.str() + " not in set");
  return static_cast<std::uint64_t>(it - elems_.begin());
}

IntSet IntSet::translated(const Int& delta) const {
  std::vector<Int> out;
  out.reserve(elems_.size());
  for (const Int& v : elems_) out.push_back(v + delta);
  return IntSet(std::move(out));
}

IntSet IntSet::scaled(const Int& factor) const {
  if (factor == 0) throw input_error("dilation factor must be nonzero");
  std::vector<Int> out;
  out.reserve(elems_.size());
  for (const Int& v : elems_) out.push_back(v * factor);
  return IntSet(std::move(out));
}

}  // namespace freicond
