#include "freicond/primes.hpp"

namespace freicond {

namespace {

// Below this bound the fixed 12-witness battery decides primality exactly
// (Sorenson-Webster). Above it a strong Lucas test is added: no composite
// passing both batteries is known, and every construction downstream of a
// prime choice is verified independently anyway.
const Int kMrExactBelow("3317044064679887385961981");

Int pow_mod(Int base, Int exp, const Int& mod) {
  Int r = 1;
  base %= mod;
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0)) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

bool miller_rabin(const Int& n, const Int& a) {
  if (a % n == 0) return true;
  Int d = n - 1;
  unsigned r = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++r;
  }
  Int x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Jacobi symbol (a/n) for odd positive n.
int jacobi(Int a, Int n) {
  a = mod_floor(a, n);
  int result = 1;
  while (a != 0) {
    while (!boost::multiprecision::bit_test(a, 0)) {
      a >>= 1;
      Int r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Strong Lucas probable-prime test with Selfridge's parameters: D from
// 5, -7, 9, -11, ... with (D/n) = -1, P = 1, Q = (1-D)/4. n odd, > 37.
bool strong_lucas(const Int& n) {
  Int d;
  {
    Int d_abs = 5;
    int sign = 1;
    for (int tries = 0;; ++tries) {
      d = sign > 0 ? d_abs : -d_abs;
      int j = jacobi(d, n);
      if (j == 0) return false;  // shares a factor with n
      if (j == -1) break;
      if (tries == 20) {
        // perfect squares admit no D with (D/n) = -1
        Int r = sqrt(n);
        if (r * r == n) return false;
      }
      d_abs += 2;
      sign = -sign;
    }
  }
  const Int q = (1 - d) / 4;

  Int k = n + 1;  // n + 1 = k * 2^s with k odd
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(k, 0)) {
    k >>= 1;
    ++s;
  }

  // division by 2 mod odd n
  auto half_mod = [&](const Int& x) {
    Int y = mod_floor(x, n);
    if (boost::multiprecision::bit_test(y, 0)) y += n;
    return Int(y >> 1);
  };

  // (U_m, V_m, Q^m) by the binary doubling chain over the bits of k
  Int u = 0, v = 2, qpow = 1;
  for (int i = static_cast<int>(boost::multiprecision::msb(k)); i >= 0; --i) {
    u = u * v % n;
    v = mod_floor(v * v - 2 * qpow, n);
    qpow = qpow * qpow % n;
    if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i))) {
      Int pu = u, pv = v;
      u = half_mod(pu + pv);           // P = 1
      v = half_mod(d * pu + pv);
      qpow = mod_floor(qpow * q, n);
    }
  }

  // strong condition: U_k = 0, or V_{k 2^r} = 0 for some 0 <= r < s
  if (u == 0 || v == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    v = mod_floor(v * v - 2 * qpow, n);
    qpow = qpow * qpow % n;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (!miller_rabin(n, a)) return false;
  if (n < kMrExactBelow) return true;
  return strong_lucas(n);
}

Int find_prime_avoiding(const Int& u, const Int& lower, bool window_doubling,
                        std::uint64_t candidate_budget) {
  if (u <= 0) throw input_error("avoided integer must be positive");
  std::uint64_t tried = 0;
  auto qualifies = [&](const Int& c) { return is_prime(c) && u % c != 0; };

  if (!window_doubling) {
    for (Int c = lower + 1;; ++c) {
      if (++tried > candidate_budget)
        throw budget_error("prime search candidates", Int(tried),
                           Int(candidate_budget));
      if (qualifies(c)) return c;
    }
  }

  Int y = lower < 2 ? Int(2) : lower;
  for (;;) {
    for (Int c = y + 1; c <= 2 * y; ++c) {
      if (++tried > candidate_budget)
        throw budget_error("prime search candidates", Int(tried),
                           Int(candidate_budget));
      if (c > lower && qualifies(c)) return c;
    }
    y *= 2;
  }
}

}  // namespace freicond
