#include "freicond/freiman.hpp"

namespace freicond {

IsoVerdict is_freiman_iso(const MapTable& psi, const IntSet& a,
                          const PolySystem& p, const Budget& budget) {
  if (psi.kind() != MapTable::Kind::single)
    throw input_error("plain isomorphism check needs a single-valued map");
  if (!psi.covers(a))
    throw input_error("map does not cover the ground set");

  const std::uint32_t s = p.arity();
  const auto n = static_cast<std::uint32_t>(a.card());
  budget.charge_tuples(int_pow(Int(n), s), "isomorphism check card^s");

  // Image aligned with the sorted ground set.
  std::vector<Int> image(n);
  for (std::uint32_t i = 0; i < n; ++i) image[i] = psi.apply(a[i]);

  std::vector<std::uint32_t> idx(s, 0);
  std::vector<Int> x(s), y(s);
  do {
    for (std::uint32_t j = 0; j < s; ++j) {
      x[j] = a[idx[j]];
      y[j] = image[idx[j]];
    }
    bool sx = p.all_vanish(x);
    bool sy = p.all_vanish(y);
    if (sx != sy) {
      return {false, Counterexample{x, sx ? Direction::lost_solution
                                          : Direction::spurious_solution}};
    }
  } while (next_index_tuple(idx, n));
  return {true, std::nullopt};
}

IsoVerdict is_tfold_freiman_iso(const MapTable& omega, const IntSet& d,
                                const PolySystem& p, const Budget& budget) {
  if (omega.kind() != MapTable::Kind::t_fold)
    throw input_error("t_fold isomorphism check needs a t_fold map");
  if (omega.base_set() != d)
    throw input_error("t_fold map base set does not match the ground set");

  const std::uint32_t s = p.arity();
  const std::uint32_t t = omega.fold();
  const auto n = static_cast<std::uint32_t>(d.card());
  budget.charge_tuples(int_pow(Int(n), std::uint64_t(t) * s),
                       "t_fold isomorphism check card^(t*s)");

  // Membership of every s-tuple over d, as a flat bitmap in odometer order.
  SolutionSet sols = solution_set(d, p, budget);
  std::vector<char> solves(static_cast<std::size_t>(
                               boost::multiprecision::pow(Int(n), s)
                                   .convert_to<std::uint64_t>()),
                           0);
  for (const auto& tup : sols.tuples()) {
    std::uint64_t code = 0;
    for (auto i : tup) code = code * n + i;
    solves[code] = 1;
  }

  // Omega images indexed by the code of the t-tuple of ground-set indices.
  const auto tpow = boost::multiprecision::pow(Int(n), t)
                        .convert_to<std::uint64_t>();
  std::vector<Int> omega_by_code(tpow);
  {
    std::vector<std::uint32_t> tidx(t, 0);
    std::vector<Int> slice(t);
    std::uint64_t code = 0;
    do {
      for (std::uint32_t i = 0; i < t; ++i) slice[i] = d[tidx[i]];
      omega_by_code[code++] = omega.apply_tuple(slice);
    } while (next_index_tuple(tidx, n));
  }

  // Odometer over the flattened (x_1,...,x_t) in d^(t*s), lexicographic.
  std::vector<std::uint32_t> idx(std::size_t(t) * s, 0);
  std::vector<Int> y(s), flat(std::size_t(t) * s);
  do {
    bool all_solve = true;
    for (std::uint32_t i = 0; i < t && all_solve; ++i) {
      std::uint64_t code = 0;
      for (std::uint32_t j = 0; j < s; ++j) code = code * n + idx[i * s + j];
      all_solve = solves[code] != 0;
    }
    // Image s-tuple: y_j = omega(x_{1j},...,x_{tj}).
    for (std::uint32_t j = 0; j < s; ++j) {
      std::uint64_t code = 0;
      for (std::uint32_t i = 0; i < t; ++i) code = code * n + idx[i * s + j];
      y[j] = omega_by_code[code];
    }
    bool image_solves = p.all_vanish(y);
    if (all_solve != image_solves) {
      for (std::uint32_t i = 0; i < t; ++i)
        for (std::uint32_t j = 0; j < s; ++j) flat[i * s + j] = d[idx[i * s + j]];
      return {false,
              Counterexample{flat, all_solve ? Direction::lost_solution
                                             : Direction::spurious_solution}};
    }
  } while (next_index_tuple(idx, n));
  return {true, std::nullopt};
}

}  // namespace freicond
