// Shared builders and reference oracles for the test suites. Everything here
// is deliberately independent of the code paths under test: the isomorphism
// oracle enumerates both solution sets from scratch and compares them as
// sets, rather than walking domain tuples in step with the library.
#pragma once

#include <random>
#include <set>
#include <vector>

#include "freicond/intset.hpp"
#include "freicond/maptable.hpp"
#include "freicond/polysystem.hpp"
#include "freicond/solutions.hpp"

namespace fct {

using freicond::Int;
using freicond::IntSet;
using freicond::MapTable;
using freicond::Poly;
using freicond::PolySystem;
using freicond::Term;

// c1 x1 + ... + cs xs + c0 (zero coefficients dropped).
inline Poly linear_poly(const std::vector<Int>& cs, const Int& c0) {
  auto s = static_cast<std::uint32_t>(cs.size());
  std::vector<Term> terms;
  for (std::uint32_t j = 0; j < s; ++j) {
    if (cs[j] == 0) continue;
    std::vector<std::uint32_t> e(s, 0);
    e[j] = 1;
    terms.push_back({cs[j], e});
  }
  if (c0 != 0) terms.push_back({c0, std::vector<std::uint32_t>(s, 0)});
  return Poly(s, std::move(terms));
}

inline PolySystem linear_system(const std::vector<Int>& cs, const Int& c0) {
  return PolySystem(static_cast<std::uint32_t>(cs.size()),
                    {linear_poly(cs, c0)});
}

// x1 + x2 - 2 x3: three-term arithmetic progressions.
inline PolySystem ap_system() { return linear_system({1, 1, -2}, 0); }

// c1 x1^t + ... + cs xs^t as a single diagonal polynomial.
inline PolySystem diagonal_system(const std::vector<Int>& cs,
                                  std::uint32_t t) {
  auto s = static_cast<std::uint32_t>(cs.size());
  std::vector<Term> terms;
  for (std::uint32_t j = 0; j < s; ++j) {
    if (cs[j] == 0) continue;
    std::vector<std::uint32_t> e(s, 0);
    e[j] = t;
    terms.push_back({cs[j], e});
  }
  return PolySystem(s, {Poly(s, std::move(terms))});
}

// x1^2 + x2^2 - x3^2 - x4^2.
inline PolySystem sum_squares_system() {
  return diagonal_system({1, 1, -1, -1}, 2);
}

// Reference isomorphism decision: build S(A;P) and S(psi A;P) independently
// and compare them as sets of index tuples under the bijection psi induces
// on indices. Equality is exactly the two-directional preservation property.
inline bool iso_oracle(const MapTable& psi, const IntSet& a,
                       const PolySystem& p) {
  IntSet b = psi.image_set();
  auto sa = freicond::solution_set(a, p);
  auto sb = freicond::solution_set(b, p);
  std::set<std::vector<std::uint32_t>> image_tuples(sb.tuples().begin(),
                                                    sb.tuples().end());
  std::set<std::vector<std::uint32_t>> mapped;
  for (const auto& t : sa.tuples()) {
    std::vector<std::uint32_t> m(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      m[i] = static_cast<std::uint32_t>(b.index_of(psi.apply(a[t[i]])));
    mapped.insert(std::move(m));
  }
  return mapped == image_tuples;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen_);
  }

  // card distinct values in [lo, hi].
  IntSet random_set(std::size_t card, long long lo, long long hi) {
    std::set<long long> vals;
    while (vals.size() < card) vals.insert(uniform(lo, hi));
    return IntSet(std::vector<Int>(vals.begin(), vals.end()));
  }

  // A random linear polynomial in s variables with coefficients in
  // [-bound, bound], at least one nonzero; homogeneous when asked.
  PolySystem random_linear_system(std::uint32_t s, long long bound,
                                  bool homogeneous) {
    std::vector<Int> cs(s);
    for (;;) {
      bool any = false;
      for (auto& c : cs) {
        c = uniform(-bound, bound);
        if (c != 0) any = true;
      }
      if (any) break;
    }
    Int c0 = homogeneous ? Int(0) : Int(uniform(-bound, bound));
    return linear_system(cs, c0);
  }

  // A random bijection from a onto card distinct values in [lo, hi].
  MapTable random_map(const IntSet& a, long long lo, long long hi) {
    IntSet img = random_set(a.card(), lo, hi);
    std::vector<Int> vals(img.values());
    std::shuffle(vals.begin(), vals.end(), gen_);
    std::vector<std::pair<Int, Int>> entries;
    for (std::uint64_t i = 0; i < a.card(); ++i)
      entries.emplace_back(a[i], vals[i]);
    return MapTable::single(std::move(entries));
  }

  std::mt19937_64& gen() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace fct
