// Dense single-variable integer polynomials with exact division, used for
// defining polynomials of algebraic numbers and the divisor searches that
// certify their minimality.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freicond/errors.hpp"
#include "freicond/ints.hpp"

namespace freicond {

class UniPoly {
 public:
  UniPoly() = default;  // the zero polynomial
  // Coefficients in ascending order of degree; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Int> coeffs);

  // x^t + c0 (so x^t - b is x_pow_plus(t, -b)).
  static UniPoly x_pow_plus(std::uint32_t t, const Int& c0);
  static UniPoly linear_root(const Int& a);  // x - a

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  const Int& leading() const;

  Int content() const;  // gcd of |coefficients|, 0 for the zero polynomial
  // Divides out the content and flips the sign so the leading coefficient is
  // positive.
  UniPoly primitive_positive() const;

  Int eval(const Int& x) const;
  Int norm1() const;     // sum |c_i|
  Int norm2_sq() const;  // sum c_i^2

  UniPoly operator*(const UniPoly& rhs) const;
  // Quotient when rhs divides *this exactly over the integers, else nullopt.
  std::optional<UniPoly> divide_exact(const UniPoly& rhs) const;

  bool operator==(const UniPoly&) const = default;

 private:
  std::vector<Int> coeffs_;  // ascending, back() != 0 when nonempty
};

}  // namespace freicond
