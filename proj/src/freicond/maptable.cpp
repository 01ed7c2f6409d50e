#include "freicond/maptable.hpp"

#include <algorithm>

#include "freicond/ints.hpp"
#include "freicond/solutions.hpp"

namespace freicond {

namespace {
void check_values_distinct(const std::vector<Int>& values) {
  std::vector<Int> v = values;
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw input_error("map is not injective: repeated image value");
}
}  // namespace

MapTable MapTable::single(std::vector<std::pair<Int, Int>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  MapTable m;
  m.kind_ = Kind::single;
  m.fold_ = 1;
  for (auto& [k, v] : entries) {
    if (!m.keys_.empty() && m.keys_.back()[0] == k)
      throw input_error("map has a repeated key: " + k.str());
    m.keys_.push_back({k});
    m.values_.push_back(v);
  }
  if (m.keys_.empty()) throw input_error("map table must be nonempty");
  check_values_distinct(m.values_);
  return m;
}

MapTable MapTable::t_fold(
    std::uint32_t t, std::vector<std::pair<std::vector<Int>, Int>> entries) {
  if (t == 0) throw input_error("fold must be at least 1");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  MapTable m;
  m.kind_ = Kind::t_fold;
  m.fold_ = t;
  std::vector<Int> coords;
  for (auto& [k, v] : entries) {
    if (k.size() != t) throw input_error("map key tuple arity mismatch");
    if (!m.keys_.empty() && m.keys_.back() == k)
      throw input_error("map has a repeated key tuple");
    coords.insert(coords.end(), k.begin(), k.end());
    m.keys_.push_back(std::move(k));
    m.values_.push_back(v);
  }
  if (m.keys_.empty()) throw input_error("map table must be nonempty");
  check_values_distinct(m.values_);
  // Domain must be the full power base^t.
  IntSet base(coords);
  Int expect = int_pow(Int(base.card()), t);
  if (Int(m.keys_.size()) != expect)
    throw input_error("t_fold domain is not a full cartesian power: have " +
                      std::to_string(m.keys_.size()) + " keys, expected " +
                      expect.str());
  return m;
}

MapTable MapTable::identity(const IntSet& a) {
  std::vector<std::pair<Int, Int>> entries;
  for (const Int& v : a.values()) entries.emplace_back(v, v);
  return single(std::move(entries));
}

std::uint64_t MapTable::find(const std::vector<Int>& key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key)
    throw input_error("map is not defined on a required key");
  return static_cast<std::uint64_t>(it - keys_.begin());
}

const Int& MapTable::apply(const Int& key) const {
  if (kind_ != Kind::single) throw input_error("expected a single-valued map");
  return values_[find({key})];
}

const Int& MapTable::apply_tuple(const std::vector<Int>& key) const {
  return values_[find(key)];
}

bool MapTable::covers(const IntSet& a) const {
  if (kind_ != Kind::single) return false;
  for (const Int& v : a.values()) {
    std::vector<Int> k{v};
    auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it == keys_.end() || *it != k) return false;
  }
  return true;
}

IntSet MapTable::domain_set() const {
  if (kind_ != Kind::single) throw input_error("expected a single-valued map");
  std::vector<Int> v;
  v.reserve(keys_.size());
  for (const auto& k : keys_) v.push_back(k[0]);
  return IntSet(std::move(v));
}

IntSet MapTable::base_set() const {
  if (kind_ != Kind::t_fold) throw input_error("expected a t_fold map");
  std::vector<Int> coords;
  for (const auto& k : keys_) coords.insert(coords.end(), k.begin(), k.end());
  return IntSet(std::move(coords));
}

IntSet MapTable::image_set() const { return IntSet(values_); }

MapTable MapTable::compose_after(const MapTable& inner) const {
  if (kind_ != Kind::single) throw input_error("expected a single-valued map");
  std::vector<std::pair<Int, Int>> entries;
  if (inner.kind_ == Kind::single) {
    for (std::uint64_t i = 0; i < inner.size(); ++i)
      entries.emplace_back(inner.keys_[i][0], apply(inner.values_[i]));
    return single(std::move(entries));
  }
  std::vector<std::pair<std::vector<Int>, Int>> tentries;
  for (std::uint64_t i = 0; i < inner.size(); ++i)
    tentries.emplace_back(inner.keys_[i], apply(inner.values_[i]));
  return t_fold(inner.fold_, std::move(tentries));
}

}  // namespace freicond
