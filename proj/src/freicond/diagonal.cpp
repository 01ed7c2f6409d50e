#include "freicond/diagonal.hpp"

#include <algorithm>
#include <utility>

#include "freicond/solutions.hpp"

namespace freicond {

namespace {

std::uint32_t require_diagonal(const PolySystem& p) {
  auto t = p.diagonal_degree();
  if (!t) throw input_error("system is not diagonal of a common degree");
  return *t;
}

}  // namespace

PolySystem induced_linear_system(const PolySystem& p) {
  require_diagonal(p);
  std::vector<Poly> polys;
  polys.reserve(p.size());
  for (std::uint64_t i = 0; i < p.size(); ++i) {
    std::vector<Term> terms;
    for (std::uint32_t j = 0; j < p.arity(); ++j) {
      Int c = p[i].single_var_coeff(j);
      if (c == 0) continue;
      std::vector<std::uint32_t> exps(p.arity(), 0);
      exps[j] = 1;
      terms.push_back(Term{std::move(c), std::move(exps)});
    }
    polys.emplace_back(p.arity(), std::move(terms));
  }
  return PolySystem(p.arity(), std::move(polys));
}

IsoVerdict is_algebraic_freiman_iso_diagonal(const MapTable& power_map,
                                             const IntSet& a,
                                             const PolySystem& p,
                                             const Budget& budget) {
  require_diagonal(p);
  if (!power_map.covers(a))
    throw input_error("an element lacks its integer t-th power datum");
  PolySystem lin = induced_linear_system(p);
  const std::uint32_t n = static_cast<std::uint32_t>(a.card());
  const std::uint32_t s = p.arity();
  budget.charge_tuples(int_pow(Int(n), s), "algebraic isomorphism check");
  std::vector<Int> powers(n);
  for (std::uint32_t i = 0; i < n; ++i) powers[i] = power_map.apply(a[i]);
  std::vector<std::uint32_t> idx(s, 0);
  std::vector<Int> point(s), image(s);
  do {
    for (std::uint32_t j = 0; j < s; ++j) {
      point[j] = a[idx[j]];
      image[j] = powers[idx[j]];
    }
    bool lhs = p.all_vanish(point);
    bool rhs = lin.all_vanish(image);
    if (lhs != rhs)
      return IsoVerdict{
          false, Counterexample{point, lhs ? Direction::lost_solution
                                           : Direction::spurious_solution}};
  } while (next_index_tuple(idx, n));
  return IsoVerdict{true, std::nullopt};
}

DiagonalResult condense_diagonal(const IntSet& a, const PolySystem& p,
                                 CondenseMode mode, unsigned max_steps,
                                 const Budget& budget) {
  const std::uint32_t t = require_diagonal(p);
  Int k = 0;
  for (std::uint64_t i = 0; i < p.size(); ++i) k = std::max(k, p[i].norm1());

  // The power map must be injective on the set; for even t this fails
  // exactly when a and -a are both present.
  std::vector<Int> powers;
  powers.reserve(a.card());
  for (std::uint64_t i = 0; i < a.card(); ++i)
    powers.push_back(int_pow(a[i], t));
  {
    std::vector<Int> sorted = powers;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw input_error(
          "sign collision: the t-th power map is not injective on the set");
  }
  IntSet a_t(powers);

  PolySystem lin = induced_linear_system(p);
  Int target = int_pow(k + 1, a.card());
  CondenseTrace trace =
      condense_iterate(a_t, lin, mode, max_steps, budget, target);
  if (trace.stop_reason == StopReason::budget)
    throw budget_error("diagonal condensation steps", Int(max_steps) + 1,
                       Int(max_steps));
  if (trace.final_set.env() > target)
    throw input_error(
        "condensation stalled above the envelope target for this mode");

  // Lift each condensed power through its certified principal t-th root.
  std::vector<DiagonalLift> lifted;
  lifted.reserve(trace.final_set.card());
  for (std::uint64_t i = 0; i < trace.final_set.card(); ++i) {
    const Int& b = trace.final_set[i];
    lifted.push_back(DiagonalLift{certify_minimal_tth_root(b, t, budget), b});
  }

  // Composite map a -> t-th power of its lifted image.
  std::vector<std::pair<Int, Int>> entries;
  entries.reserve(a.card());
  for (std::uint64_t i = 0; i < a.card(); ++i)
    entries.emplace_back(a[i], trace.composed.apply(a_t[i]));
  MapTable power_map = MapTable::single(std::move(entries));

  IsoVerdict iso = is_algebraic_freiman_iso_diagonal(power_map, a, p, budget);
  if (!iso.yes)
    throw internal_error(
        "diagonal condensation failed its integer-reduction verification");

  std::vector<AlgNum> roots;
  roots.reserve(lifted.size());
  for (const DiagonalLift& l : lifted) roots.push_back(l.root);
  AlgSet bset(std::move(roots));
  EnvAlgebraic env = bset.env();
  Int env_bound = Int(t) * int_pow(Int(2), std::uint64_t(t) + 1) * target;
  if (env.value > env_bound)
    throw internal_error("lifted envelope exceeds its proven bound");
  Int degree_cap = int_pow(Int(t), a.card());
  Int degree_value = bset.degree_bound();
  if (degree_value > degree_cap)
    throw internal_error("lifted degree bookkeeping exceeds t^card");

  DiagonalCertificate cert{t,
                           std::move(k),
                           std::move(a_t),
                           std::move(trace),
                           std::move(iso),
                           env.value,
                           env.exact,
                           std::move(env_bound),
                           std::move(degree_value),
                           std::move(degree_cap)};
  return DiagonalResult{std::move(lifted), std::move(power_map),
                        std::move(cert)};
}

}  // namespace freicond
