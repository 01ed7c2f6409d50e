// Constructive condensation: replace a set of large diameter by a Freiman
// P-isomorphic set of small envelope, witnessed by an explicit residue map
// that is re-verified exhaustively after construction.
//
// Three modes build the map psi:
//   thm31   a ↦ [a mod h] with h = pi*L/rho; accepts any linear system.
//           pi is the least prime above Lambda avoiding Upsilon, L is
//           lcm[1..(Lambda+1)^card], rho comes from the box principle with
//           modulus pi*L.
//   thm32   a ↦ [rho*a mod pi] for homogeneous linear systems; pi is the
//           least prime above (Lambda+1)^card avoiding Upsilon, rho from the
//           box principle with modulus pi.
//   greedy  exhaustive scan for the smallest modulus h (then smallest rho)
//           whose residue map works; homogeneous systems only.
//
// [x] denotes the numerically least residue, -h/2 < [x] <= h/2. Lambda is
// the system height max_i ||P_i||_1. Every step checks, exhaustively:
//   (i)   distinct elements stay distinct mod h,
//   (ii)  every non-solution tuple keeps some P_i nonzero mod h,
//   (iii) ||rho*a/h|| <= 1/(Lambda+1) for every element (rho = 1 in thm31
//         mode, where it is folded into h),
// plus the full two-sided isomorphism property of the finished map.
#pragma once

#include <optional>

#include "freicond/freiman.hpp"
#include "freicond/intset.hpp"
#include "freicond/maptable.hpp"
#include "freicond/polysystem.hpp"

namespace freicond {

enum class CondenseMode { thm31, thm32, greedy };

struct CondenseStep {
  CondenseMode mode;
  Int pi;   // 0 in greedy mode
  Int rho;
  Int L;    // 1 outside thm31 mode
  Int h;
  MapTable map;
  Int env_before;
  Int env_after;
};

enum class StopReason { no_strict_decrease, budget, target_reached };

struct CondenseTrace {
  IntSet initial;
  IntSet final_set;
  std::vector<CondenseStep> steps;
  MapTable composed;
  StopReason stop_reason;
};

// Product over ordered pairs of distinct elements of |a1 - a2|, times the
// product over non-solution tuples of sum_i |P_i(a)|. Empty products are 1.
Int compute_upsilon(const IntSet& a, const PolySystem& p,
                    const Budget& budget = {});

// Least rho in [1, rho_cap] with ||rho*a/modulus|| <= 1/(lambda+1) for every
// element, decided in exact integer arithmetic; nullopt if none qualifies.
std::optional<Int> box_principle_rho(const IntSet& a, const Int& modulus,
                                     const Int& lambda, const Int& rho_cap,
                                     const Budget& budget = {});

// One condensation step, or nullopt when the constructed map does not
// strictly decrease the envelope (or, in greedy mode, no modulus works).
std::optional<CondenseStep> condense_step(const IntSet& a, const PolySystem& p,
                                          CondenseMode mode,
                                          const Budget& budget = {});

// Smallest modulus h <= h_cap (then smallest rho) whose residue map
// satisfies (i)-(iii) and verifies as a Freiman P-isomorphism.
std::optional<CondenseStep> greedy_min_modulus(const IntSet& a,
                                               const PolySystem& p,
                                               const Int& h_cap,
                                               const Budget& budget = {});

// Iterates condense_step until no strict decrease, max_steps, or the target
// envelope is reached. target_env defaults to (Lambda+1)^card in thm32 mode
// and to no target otherwise. The composed map is verified end to end.
CondenseTrace condense_iterate(
    const IntSet& a, const PolySystem& p, CondenseMode mode,
    unsigned max_steps, const Budget& budget = {},
    std::optional<Int> target_env = std::nullopt);

}  // namespace freicond
