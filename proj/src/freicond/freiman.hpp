// Exhaustive verification that an explicit map preserves the solution set of
// a polynomial system in both directions, in the plain and t_fold senses.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freicond/maptable.hpp"
#include "freicond/polysystem.hpp"
#include "freicond/solutions.hpp"

namespace freicond {

enum class Direction {
  lost_solution,     // the tuple solves but its image does not
  spurious_solution  // the tuple does not solve but its image does
};

struct Counterexample {
  std::vector<Int> tuple;  // entries from the domain, flattened for t_fold
  Direction direction;
};

struct IsoVerdict {
  bool yes = false;
  std::optional<Counterexample> witness;  // lexicographically first violation
};

// psi must cover a injectively. Checks, over every tuple x in a^s, that
// [all P_i(x) = 0] iff [all P_i(psi x) = 0].
IsoVerdict is_freiman_iso(const MapTable& psi, const IntSet& a,
                          const PolySystem& p, const Budget& budget = {});

// omega is a t_fold table whose base set must equal d. Checks, over every
// (x_1,...,x_t) with x_i in d^s, that [all x_i solve] iff the image s-tuple
// (omega applied to the s coordinate slices) solves. The counterexample tuple
// is the flattened (x_1,...,x_t), ordered lexicographically.
IsoVerdict is_tfold_freiman_iso(const MapTable& omega, const IntSet& d,
                                const PolySystem& p, const Budget& budget = {});

}  // namespace freicond
