// Systems of integer polynomials in s variables, stored as sparse term lists.
// A linear polynomial written in the convention c_1 x_1 + ... + c_s x_s - b
// simply carries -b as its constant term.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freicond/errors.hpp"
#include "freicond/ints.hpp"

namespace freicond {

struct Term {
  Int coeff;                       // nonzero
  std::vector<std::uint32_t> exps;  // one exponent per variable
  std::uint32_t total_degree() const;
  bool operator==(const Term&) const = default;
};

class Poly {
 public:
  // Canonicalizes: merges equal exponent vectors, drops zero coefficients,
  // sorts terms by exponent vector. Rejects the identically zero polynomial.
  Poly(std::uint32_t nvars, std::vector<Term> terms);

  std::uint32_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::uint32_t degree() const { return degree_; }
  Int norm1() const;  // sum of |coeff| over all terms, constant included
  bool is_linear() const;       // every term of total degree <= 1
  bool is_homogeneous() const;  // all terms share one total degree >= 1
  // c_j if the poly is sum_j c_j x_j^t for a single exponent t (with each
  // variable in at most one term and no constant); nullopt otherwise.
  std::optional<std::uint32_t> diagonal_degree() const;
  Int coeff_of_var(std::uint32_t j) const;  // degree-1 coefficient of x_j
  // Coefficient of the term supported on x_j alone, any degree; 0 if absent.
  Int single_var_coeff(std::uint32_t j) const;
  Int constant_term() const;

  Int eval(const std::vector<Int>& point) const;

  bool operator==(const Poly&) const = default;

 private:
  std::uint32_t nvars_;
  std::vector<Term> terms_;
  std::uint32_t degree_;
};

class PolySystem {
 public:
  PolySystem(std::uint32_t nvars, std::vector<Poly> polys);

  std::uint32_t arity() const { return nvars_; }           // s
  std::uint64_t size() const { return polys_.size(); }     // r
  const Poly& operator[](std::uint64_t i) const { return polys_[i]; }
  const std::vector<Poly>& polys() const { return polys_; }

  std::uint32_t degree_bound() const { return degree_; }   // t
  // max_i ||P_i||_1. For a linear system this equals the height
  // Lambda = max_i (sum_j |c_ij| + |b_i|).
  const Int& norm1_max() const { return norm1_max_; }
  bool is_linear() const { return linear_; }
  bool is_homogeneous() const { return homogeneous_; }
  // Common diagonal power t when every poly has shape sum_j c_ij x_j^t.
  std::optional<std::uint32_t> diagonal_degree() const { return diag_; }

  // True when every polynomial vanishes at the point.
  bool all_vanish(const std::vector<Int>& point) const;

  bool operator==(const PolySystem&) const = default;

 private:
  std::uint32_t nvars_;
  std::vector<Poly> polys_;
  std::uint32_t degree_;
  Int norm1_max_;
  bool linear_;
  bool homogeneous_;
  std::optional<std::uint32_t> diag_;
};

}  // namespace freicond
