// Exact Vinogradov-type mean values J_{s,k} and their phi-weighted variant,
// computed by tallying moment vectors over s-tuples and summing squared
// multiplicities. The direct 2s-tuple enumeration is kept as a reference
// oracle, and bound_report packages the trivial envelope card^s <= J <=
// card^(2s) together with informational comparisons.
#pragma once

#include <optional>
#include <vector>

#include "freicond/errors.hpp"
#include "freicond/intset.hpp"
#include "freicond/polysystem.hpp"

namespace freicond {

// Number of 2s-tuples (x_1..x_s, y_1..y_s) in A^(2s) with
// sum x_i^j = sum y_i^j for j = 1..k, via the moment-tally identity
// J = sum over moment vectors of N(v)^2. Costs card^s tuples.
Int count_J(const IntSet& a, std::uint32_t s, std::uint32_t k,
            const Budget& budget = {});

// Reference oracle: direct enumeration of A^(2s).
Int count_J_oracle(const IntSet& a, std::uint32_t s, std::uint32_t k,
                   const Budget& budget = {});

// Same tally with phi_j(x) replacing x^j. Each phi must be a polynomial in
// one variable; phis.size() plays the role of k.
Int count_J_phi(const IntSet& a, std::uint32_t s,
                const std::vector<Poly>& phis, const Budget& budget = {});

// {a - min(A)}: shifts the minimum to zero, so env(output) = diam(input).
IntSet translate_to_zero(const IntSet& a);

// The Vinogradov system in 2s variables: for j = 1..k,
// x_1^j + ... + x_s^j - x_{s+1}^j - ... - x_{2s}^j.
PolySystem vinogradov_system(std::uint32_t s, std::uint32_t k);

struct BoundReport {
  Int lower;  // card^s
  Int upper;  // card^(2s)
  bool trivial_ok;
  BigFloat eps;
  BigFloat envelope;  // diam^eps * (card^s + card^(2s - k(k+1)/2)), informational
  std::optional<Int> consecutive_j;  // J_{s,k}({1..card}) when within budget
  std::optional<int> consecutive_cmp;  // sign of J - consecutive_j
};

// Envelope and comparison report for an already computed J. Comparisons are
// informational; only the trivial envelope is a hard fact.
BoundReport bound_report(const IntSet& a, std::uint32_t s, std::uint32_t k,
                         const Int& j, const BigFloat& eps = BigFloat("0.01"),
                         const Budget& budget = {});

}  // namespace freicond
