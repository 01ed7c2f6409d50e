// Algebraic numbers carried as defining-polynomial data: content-1 positive-
// leading integer polynomials plus a root index into the deterministic
// ordering of the polynomial's roots by real part, then imaginary part. The
// only construction needed here is the principal t-th root of an integer,
// whose minimal polynomial is certified by complete factorization of x^t - b
// over the integers and interval elimination among the circle roots.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freicond/errors.hpp"
#include "freicond/ints.hpp"
#include "freicond/unipoly.hpp"

namespace freicond {

struct AlgNum {
  UniPoly poly;  // nonzero, content 1, positive leading coefficient
  std::uint32_t root_index = 0;
  bool certified_minimal = false;

  bool operator==(const AlgNum&) const = default;
};

// The rational integer a as an algebraic number: x - a, automatically
// minimal.
AlgNum integer_algnum(const Int& a);

struct EnvAlgebraic {
  Int value;   // max 1-norm of the defining polynomials
  bool exact;  // true iff every element is certified minimal
};

// Finite set of algebraic numbers; distinctness is certified by pairwise
// disagreement of (defining_poly, root_index).
class AlgSet {
 public:
  explicit AlgSet(std::vector<AlgNum> elems);

  std::uint64_t card() const { return elems_.size(); }
  const AlgNum& operator[](std::uint64_t i) const { return elems_[i]; }
  const std::vector<AlgNum>& elements() const { return elems_; }

  EnvAlgebraic env() const;
  Int degree_bound() const;  // product of defining-poly degrees

 private:
  std::vector<AlgNum> elems_;
};

EnvAlgebraic env_algebraic(const AlgSet& c);

// Complete irreducible factorization of x^t - b over the integers (monic
// factors, sorted by degree then coefficients), by minimal-degree divisor
// search with coefficient bounds from the root circle. nullopt when the
// candidate budget is exhausted.
std::optional<std::vector<UniPoly>> factor_power_poly(
    const Int& b, std::uint32_t t, std::uint64_t candidate_cap = 1000000);

// The principal t-th root of b (the real root for b >= 0 or odd t, else the
// first root above the positive real axis), with its minimal polynomial
// certified by factorization plus interval elimination. When the factoring
// budget runs out, returns x^t - b uncertified; the root index is then taken
// within the full root set of x^t - b.
AlgNum certify_minimal_tth_root(const Int& b, std::uint32_t t,
                                const Budget& budget = {});

// Exact check of ||r||_2 <= ((sqrt(5)+1)/2)^t * ||x^t - b||_2 with the right
// side compared through its conjugate pair, no rounding anywhere.
bool granville_holds(const UniPoly& r, std::uint32_t t, const Int& b);

// Line format: "poly: c_d ... c_1 c_0 ; root: i ; minimal: yes|no", with
// coefficients descending.
std::string format_algnum(const AlgNum& a);
AlgNum parse_algnum(const std::string& line);

}  // namespace freicond
