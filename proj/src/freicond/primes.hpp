// Deterministic primality and prime searches that avoid the divisors of a
// fixed integer. The Miller-Rabin witness set {2,...,37} is exact below
// 3.3e24; beyond that (never reached at the intended scale) the test falls
// back to trial division, staying deterministic.
#pragma once

#include "freicond/errors.hpp"
#include "freicond/ints.hpp"

namespace freicond {

bool is_prime(const Int& n);

// Least prime pi > lower with pi not dividing u (u > 0). With
// window_doubling the search walks windows (y, 2y] starting at y = lower and
// doubles until one contains a qualifying prime, which yields the same least
// prime as the linear scan. Throws budget_error when candidate_budget
// candidates are exhausted.
Int find_prime_avoiding(const Int& u, const Int& lower,
                        bool window_doubling = false,
                        std::uint64_t candidate_budget = 1000000);

}  // namespace freicond
