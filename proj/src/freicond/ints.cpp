#include "freicond/ints.hpp"

#include <stdexcept>

namespace freicond {

Int iroot(const Int& n, unsigned t) {
  if (n < 0) throw std::invalid_argument("iroot: negative radicand");
  if (t == 0) throw std::invalid_argument("iroot: zeroth root");
  if (n == 0 || n == 1 || t == 1) return n;
  // Bracket by bit length, then binary search.
  std::uint64_t bits = boost::multiprecision::msb(n) + 1;
  Int hi = Int(1) << (bits / t + 1);
  Int lo = 0;
  while (lo < hi - 1) {
    Int mid = (lo + hi) / 2;
    if (int_pow(mid, t) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Int lcm_upto(std::uint64_t n) {
  Int r = 1;
  for (std::uint64_t m = 2; m <= n; ++m) r = boost::multiprecision::lcm(r, Int(m));
  return r;
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace freicond
