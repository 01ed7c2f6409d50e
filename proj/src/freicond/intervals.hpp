// Exact rational interval arithmetic, an enclosure of pi, and enclosures of
// cos/sin at rational points. Used only to separate candidate roots when
// selecting which irreducible divisor vanishes at a chosen root of x^t - b;
// no theorem-side decision depends on it.
#pragma once

#include "freicond/errors.hpp"
#include "freicond/ints.hpp"
#include "freicond/unipoly.hpp"

namespace freicond {

struct RatInterval {
  Rational lo;
  Rational hi;

  static RatInterval point(const Rational& v) { return {v, v}; }
  bool excludes_zero() const { return lo > 0 || hi < 0; }
  Rational width() const { return hi - lo; }

  RatInterval operator+(const RatInterval& r) const;
  RatInterval operator-(const RatInterval& r) const;
  RatInterval operator*(const RatInterval& r) const;
  RatInterval operator-() const { return {-hi, -lo}; }
  RatInterval scaled(const Rational& f) const;  // f may be negative
};

struct ComplexBox {
  RatInterval re;
  RatInterval im;

  static ComplexBox real_point(const Rational& v) {
    return {RatInterval::point(v), RatInterval::point(0)};
  }
  bool excludes_zero() const {
    return re.excludes_zero() || im.excludes_zero();
  }
  ComplexBox operator+(const ComplexBox& r) const;
  ComplexBox operator*(const ComplexBox& r) const;
};

// Horner evaluation of p over a complex box.
ComplexBox eval_box(const UniPoly& p, const ComplexBox& z);

// Enclosure of the real t-th root of n >= 0, refined by `steps` bisections
// of exact rational midpoints (collapses to a point for perfect powers).
RatInterval real_root_interval(const Int& n, std::uint32_t t,
                               unsigned steps);

// Machin enclosure 16 atan(1/5) - 4 atan(1/239) with `terms` series terms on
// each side of each arctangent.
RatInterval pi_interval(unsigned terms);

// Enclosures of cos and sin over a rational interval whose endpoints lie in
// [-4, 4]: alternating Taylor series at the midpoint, bracketed by
// consecutive partial sums, widened by the interval radius (derivative
// bound 1).
RatInterval cos_interval(const RatInterval& x, unsigned terms);
RatInterval sin_interval(const RatInterval& x, unsigned terms);

}  // namespace freicond
