// Densification: trade cardinality for envelope. A card-D set is mapped into
// a card^D set through omega(d) = sum_i d_i * prod_{j != i} pi_j with D
// distinct primes avoiding the obstruction product, which realizes a D-fold
// Freiman P-isomorphism for homogeneous linear systems. Ratios log env /
// log card are tracked exactly as (env, card) pairs plus evaluated
// high-precision values.
#pragma once

#include <optional>

#include "freicond/freiman.hpp"
#include "freicond/intset.hpp"
#include "freicond/polysystem.hpp"
#include "freicond/condense.hpp"

namespace freicond {

enum class DensifyVerify { automatic, full, count, sample };

struct LogRatio {
  Int env;
  Int card;
  BigFloat value;  // log env / log card, 256-bit evaluation
};

LogRatio make_log_ratio(const Int& env, const Int& card);

struct DensifyStep {
  std::vector<Int> primes;
  Int y_used;  // primes were drawn from (y_used, 2*y_used]
  IntSet input;
  IntSet output;
  MapTable omega;  // t_fold witness, fold = card(input)
  LogRatio ratio_before;
  LogRatio ratio_after;
  DensifyVerify verify_used;     // resolved mode that actually ran
  bool count_identity_checked;   // |S(out)| = |S(in)|^D confirmed
  Int env_bound;                 // D * (2Y)^(D-1) * env(input)
};

struct DensifyRun {
  IntSet initial;
  IntSet final_set;
  std::vector<DensifyStep> steps;
  StopReason stop_reason;  // target_reached or budget
  bool target_reached;
};

struct DensifyOptions {
  DensifyVerify verify = DensifyVerify::automatic;
  Int y_start = 2;
  std::uint64_t sample_count = 1024;
  Budget budget;
};

// The D smallest primes in (y, 2y] not dividing u, where y starts at
// max(y_start, 2) and doubles until the window holds D qualifying primes.
// Returns the primes and the final y.
std::pair<std::vector<Int>, Int> find_d_primes(const Int& u,
                                               std::uint32_t d_count,
                                               const Int& y_start,
                                               const Budget& budget = {});

Int omega_map(const std::vector<Int>& d, const std::vector<Int>& primes);

// One densification step for a homogeneous linear system on a set with
// card >= 2. The analytic window floor ceil(4 * D^s * ln(r*Lambda*X)) is
// folded into y_start. Verification resolves `automatic` to full enumeration
// for card <= 3 and to sampled slices plus the counting identity (budget
// permitting) above that.
DensifyStep densify_step(const IntSet& dset, const PolySystem& p,
                         const DensifyOptions& opts = {});

// Applies densify_step while env(current) > card(current)^(s(1+4*eps)),
// decided in exact integer arithmetic with eps = eps_num/eps_den in
// (0, 1/8).
DensifyRun densify_iterate(const IntSet& a, const PolySystem& p,
                           const Int& eps_num, const Int& eps_den,
                           unsigned max_steps,
                           const DensifyOptions& opts = {});

// Exact continuation predicate env > card^(s(1+4*eps)).
bool densify_should_continue(const IntSet& a, std::uint32_t s,
                             const Int& eps_num, const Int& eps_den);

// Congruence-level preservation for homogeneous (possibly nonlinear)
// systems: over every tuple of fold-many rows from dset^s, all rows solve
// exactly iff every P_l vanishes mod prod(primes) on the omega images of the
// coordinate slices. The fold is primes.size(). Each prime must avoid the
// per-polynomial obstruction product (ordered pair differences times
// prod_l prod over tuples with P_l nonzero of |P_l|). force_generic skips
// the bit-parallel diagonal fast path.
bool modular_preservation_check(const IntSet& dset, const PolySystem& p,
                                const std::vector<Int>& primes,
                                const Budget& budget = {},
                                bool force_generic = false);

// Obstruction product in the per-polynomial form used by the modular check.
Int compute_upsilon_per_poly(const IntSet& a, const PolySystem& p,
                             const Budget& budget = {});

struct StepConditions {
  bool cond75;         // (2Y)^q <= env(in)^(q-2p), exact
  bool cond76;         // ratio_after <= (1-eps) * ratio_before
  BigFloat lhs76;
  BigFloat rhs76;
  BigFloat margin;     // |rhs76 - lhs76| at shadow precision
  BigFloat err_bound;  // observed two-precision evaluation discrepancy
};

// Evaluates the window condition and the ratio-improvement condition for a
// finished step. cond76 is decided at 320-bit shadow precision and the
// comparison margin must dominate the evaluation error.
StepConditions check_step_conditions(const DensifyStep& step,
                                     const Int& eps_num, const Int& eps_den);

}  // namespace freicond
