// Arbitrary-precision number aliases and small integer helpers shared by the
// whole library. All set elements, coefficients and moduli are exact cpp_int;
// the float types appear only in ratio bookkeeping, never in any decision that
// a theorem-side check depends on.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <string>

namespace freicond {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 256-bit mantissa working precision and a wider shadow used to bound the
// evaluation error of log-ratio comparisons.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<
        256, boost::multiprecision::backends::digit_base_2>>;
using BigFloatWide = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<
        320, boost::multiprecision::backends::digit_base_2>>;

inline Int int_pow(const Int& base, std::uint64_t e) {
  Int r = 1;
  Int b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Floor of the t-th root of n >= 0.
Int iroot(const Int& n, unsigned t);

// Floored modulus: result in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// The numerically least residue of a mod h: the unique m ≡ a (mod h) with
// -h/2 < m <= h/2.
inline Int least_residue(const Int& a, const Int& h) {
  Int r = mod_floor(a, h);
  if (2 * r > h) r -= h;
  return r;
}

// Numerator of the distance from a/m to the nearest integer, i.e.
// ||a/m|| = circ_distance(a, m) / m.
inline Int circ_distance(const Int& a, const Int& m) {
  Int r = mod_floor(a, m);
  Int d = m - r;
  return r < d ? r : d;
}

// lcm[1, 2, ..., n] as an exact integer.
Int lcm_upto(std::uint64_t n);

std::string to_string(const Int& v);

}  // namespace freicond
