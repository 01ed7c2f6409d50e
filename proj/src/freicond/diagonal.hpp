// Condensation through t-th roots for diagonal systems sum_j c_ij x_j^t: the
// set of t-th powers is condensed under the induced linear system, and the
// condensed values are lifted back through certified principal t-th roots.
// Every verification runs on the integer t-th powers via the identity
// P_i(beta_1, ..., beta_s) = sum_j c_ij * (beta_j^t), so the algebraic
// Freiman condition is decided without any numerics.
#pragma once

#include <vector>

#include "freicond/algnum.hpp"
#include "freicond/condense.hpp"
#include "freicond/freiman.hpp"
#include "freicond/intset.hpp"
#include "freicond/polysystem.hpp"

namespace freicond {

struct DiagonalLift {
  AlgNum root;
  Int power;  // root^t, the integer datum all checks run on
};

struct DiagonalCertificate {
  std::uint32_t t;
  Int k;  // max 1-norm of the diagonal system
  IntSet a_t;
  CondenseTrace trace;  // linear condensation of the powers
  IsoVerdict iso;       // integer-reduction verdict for the composite map
  Int env_value;        // Env of the lifted set
  bool env_exact;
  Int env_bound;     // t * 2^(t+1) * (k+1)^card
  Int degree_value;  // product of defining-poly degrees
  Int degree_cap;    // t^card
};

struct DiagonalResult {
  std::vector<DiagonalLift> lifted;  // ordered like trace.final_set
  MapTable power_map;                // a -> t-th power of its lifted image
  DiagonalCertificate cert;
};

// Checks that power_map realizes an algebraic Freiman P-isomorphism for the
// diagonal system p: over every tuple in a^s, all P_i vanish iff the induced
// linear forms vanish on the mapped t-th powers. power_map must cover a.
IsoVerdict is_algebraic_freiman_iso_diagonal(const MapTable& power_map,
                                             const IntSet& a,
                                             const PolySystem& p,
                                             const Budget& budget = {});

// The linear system L_i(y) = sum_j c_ij y_j induced by a diagonal system.
PolySystem induced_linear_system(const PolySystem& p);

// Full pipeline: powers, linear condensation (target env (k+1)^card), lift,
// certificate. Rejects sets where a -> a^t collides (t even with a and -a
// both present).
DiagonalResult condense_diagonal(const IntSet& a, const PolySystem& p,
                                 CondenseMode mode = CondenseMode::thm32,
                                 unsigned max_steps = 64,
                                 const Budget& budget = {});

}  // namespace freicond
