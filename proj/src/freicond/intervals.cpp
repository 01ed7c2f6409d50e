#include "freicond/intervals.hpp"

#include <algorithm>

namespace freicond {

RatInterval RatInterval::operator+(const RatInterval& r) const {
  return {lo + r.lo, hi + r.hi};
}

RatInterval RatInterval::operator-(const RatInterval& r) const {
  return {lo - r.hi, hi - r.lo};
}

RatInterval RatInterval::operator*(const RatInterval& r) const {
  Rational a = lo * r.lo, b = lo * r.hi, c = hi * r.lo, d = hi * r.hi;
  return {std::min(std::min(a, b), std::min(c, d)),
          std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::scaled(const Rational& f) const {
  if (f >= 0) return {lo * f, hi * f};
  return {hi * f, lo * f};
}

ComplexBox ComplexBox::operator+(const ComplexBox& r) const {
  return {re + r.re, im + r.im};
}

ComplexBox ComplexBox::operator*(const ComplexBox& r) const {
  return {re * r.re - im * r.im, re * r.im + im * r.re};
}

ComplexBox eval_box(const UniPoly& p, const ComplexBox& z) {
  ComplexBox acc = ComplexBox::real_point(0);
  if (p.is_zero()) return acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;)
    acc = acc * z + ComplexBox::real_point(Rational(p[i]));
  return acc;
}

RatInterval real_root_interval(const Int& n, std::uint32_t t,
                               unsigned steps) {
  if (n < 0) throw input_error("real root enclosure needs n >= 0");
  if (t == 0) throw input_error("root order must be positive");
  Int r = iroot(n, t);
  if (int_pow(r, t) == n) return RatInterval::point(Rational(r));
  Rational lo(r), hi(r + 1);
  for (unsigned i = 0; i < steps; ++i) {
    Rational mid = (lo + hi) / 2;
    // mid^t vs n, exact.
    Rational mt = 1;
    for (std::uint32_t j = 0; j < t; ++j) mt *= mid;
    if (mt < n)
      lo = mid;
    else if (mt > n)
      hi = mid;
    else
      return RatInterval::point(mid);
  }
  return {lo, hi};
}

namespace {

// Bracketing enclosure of atan(1/x) for integer x >= 2 from the alternating
// series sum (-1)^n / ((2n+1) x^(2n+1)).
RatInterval atan_inv(const Int& x, unsigned terms) {
  Rational prev = 0, cur = 0;
  Rational xx = Rational(1) / Rational(x);
  Rational x2inv = xx * xx;
  Rational pw = xx;  // x^-(2n+1)
  for (unsigned n = 0; n < terms; ++n) {
    prev = cur;
    Rational term = pw / Rational(2 * n + 1);
    cur += (n % 2 == 0) ? term : -term;
    pw *= x2inv;
  }
  return {std::min(prev, cur), std::max(prev, cur)};
}

// Alternating Taylor enclosure at a rational point m with |m| <= 4. Terms
// x^(2n)/(2n)! (cos) decrease strictly once 2n+1 > m^2, which 16 guarantees;
// consecutive partial sums then bracket the limit.
RatInterval cos_point(const Rational& m, unsigned terms) {
  Rational m2 = m * m;
  Rational term = 1, sum = 1, prev = 1;
  for (unsigned n = 1; n < std::max(terms, 12u); ++n) {
    term *= m2 / Rational(Int(2 * n - 1) * Int(2 * n));
    prev = sum;
    sum += (n % 2 == 1) ? -term : term;
  }
  return {std::min(prev, sum), std::max(prev, sum)};
}

RatInterval sin_point(const Rational& m, unsigned terms) {
  Rational m2 = m * m;
  Rational term = m, sum = m, prev = m;
  for (unsigned n = 1; n < std::max(terms, 12u); ++n) {
    term *= m2 / Rational(Int(2 * n) * Int(2 * n + 1));
    prev = sum;
    sum += (n % 2 == 1) ? -term : term;
  }
  return {std::min(prev, sum), std::max(prev, sum)};
}

RatInterval widen_by_radius(const RatInterval& v, const Rational& rad) {
  return {v.lo - rad, v.hi + rad};
}

}  // namespace

RatInterval pi_interval(unsigned terms) {
  RatInterval a5 = atan_inv(Int(5), terms);
  RatInterval a239 = atan_inv(Int(239), terms);
  return a5.scaled(16) - a239.scaled(4);
}

RatInterval cos_interval(const RatInterval& x, unsigned terms) {
  Rational mid = (x.lo + x.hi) / 2;
  if (abs(mid) > 4)
    throw input_error("cos enclosure only supports |x| <= 4");
  Rational rad = (x.hi - x.lo) / 2;
  return widen_by_radius(cos_point(mid, terms), rad);
}

RatInterval sin_interval(const RatInterval& x, unsigned terms) {
  Rational mid = (x.lo + x.hi) / 2;
  if (abs(mid) > 4)
    throw input_error("sin enclosure only supports |x| <= 4");
  Rational rad = (x.hi - x.lo) / 2;
  return widen_by_radius(sin_point(mid, terms), rad);
}

}  // namespace freicond
