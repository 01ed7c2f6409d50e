#include "freicond/condense.hpp"

#include <algorithm>
#include <set>

#include "freicond/primes.hpp"
#include "freicond/solutions.hpp"

namespace freicond {

namespace {

Int system_height(const PolySystem& p) {
  Int lambda = p.norm1_max();
  if (lambda < 1) throw internal_error("system height below 1");
  return lambda;
}

// Exhaustive recheck of the three construction properties for
// psi(a) = [rho * a mod h]. Returns false naming no culprit; theorem modes
// escalate a failure to internal_error.
bool residue_map_properties(const IntSet& a, const PolySystem& p,
                            const Int& rho, const Int& h, const Int& lambda,
                            const Budget& budget) {
  const auto n = static_cast<std::uint32_t>(a.card());
  std::vector<Int> res(n), image(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    res[i] = mod_floor(rho * a[i], h);
    image[i] = least_residue(rho * a[i], h);
  }
  // (i) distinct elements stay distinct mod h.
  {
    std::vector<Int> sorted = res;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return false;
  }
  // (iii) ||rho*a/h|| <= 1/(lambda+1).
  for (std::uint32_t i = 0; i < n; ++i)
    if (circ_distance(rho * a[i], h) * (lambda + 1) > h) return false;
  // (ii) every non-solution tuple keeps some P_i nonzero mod h.
  const std::uint32_t s = p.arity();
  budget.charge_tuples(int_pow(Int(n), s), "property check card^s");
  std::vector<std::uint32_t> idx(s, 0);
  std::vector<Int> x(s), y(s);
  do {
    for (std::uint32_t j = 0; j < s; ++j) {
      x[j] = a[idx[j]];
      y[j] = image[idx[j]];
    }
    if (!p.all_vanish(x)) {
      bool some_nonzero = false;
      for (const auto& poly : p.polys())
        if (mod_floor(poly.eval(y), h) != 0) {
          some_nonzero = true;
          break;
        }
      if (!some_nonzero) return false;
    }
  } while (next_index_tuple(idx, n));
  return true;
}

MapTable residue_map(const IntSet& a, const Int& rho, const Int& h) {
  std::vector<std::pair<Int, Int>> entries;
  for (const Int& v : a.values())
    entries.emplace_back(v, least_residue(rho * v, h));
  return MapTable::single(std::move(entries));
}

// Shared tail of the two theorem modes: build the map, recheck everything,
// and apply the strict-decrease rule. map_rho is the multiplier actually
// applied inside the residue map (1 when rho is folded into the modulus),
// while rho is what the step records.
std::optional<CondenseStep> finish_theorem_step(
    const IntSet& a, const PolySystem& p, CondenseMode mode, const Int& pi,
    const Int& rho, const Int& L, const Int& h, const Int& map_rho,
    const Int& lambda, const Budget& budget) {
  if (h <= lambda) throw internal_error("modulus h not above the height");
  if (!residue_map_properties(a, p, map_rho, h, lambda, budget))
    throw internal_error("constructed residue map violates properties (i)-(iii)");
  MapTable psi = residue_map(a, map_rho, h);
  IsoVerdict v = is_freiman_iso(psi, a, p, budget);
  if (!v.yes)
    throw internal_error("constructed residue map is not an isomorphism");
  Int env_before = a.env();
  Int env_after = psi.image_set().env();
  if (env_after >= env_before) return std::nullopt;
  return CondenseStep{mode, pi, rho, L, h, std::move(psi), env_before,
                      env_after};
}

}  // namespace

Int compute_upsilon(const IntSet& a, const PolySystem& p,
                    const Budget& budget) {
  Int u = 1;
  const auto n = a.card();
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j) {
      Int d = a[j] - a[i];  // ordered pairs: each unordered pair twice
      u *= d * d;
    }
  const std::uint32_t s = p.arity();
  budget.charge_tuples(int_pow(Int(n), s), "upsilon enumeration card^s");
  std::vector<std::uint32_t> idx(s, 0);
  std::vector<Int> x(s);
  do {
    for (std::uint32_t j = 0; j < s; ++j) x[j] = a[idx[j]];
    Int total = 0;
    for (const auto& poly : p.polys()) total += abs(poly.eval(x));
    if (total != 0) u *= total;  // non-solution tuple
  } while (next_index_tuple(idx, static_cast<std::uint32_t>(n)));
  return u;
}

std::optional<Int> box_principle_rho(const IntSet& a, const Int& modulus,
                                     const Int& lambda, const Int& rho_cap,
                                     const Budget& budget) {
  if (modulus < 2) throw input_error("box principle needs modulus >= 2");
  if (rho_cap > budget.max_box_cap)
    throw budget_error("box principle scan", rho_cap, budget.max_box_cap);
  // Residues only: ||rho*a/M|| depends on a mod M alone.
  std::vector<Int> amod;
  amod.reserve(a.card());
  for (const Int& v : a.values()) amod.push_back(mod_floor(v, modulus));
  for (Int rho = 1; rho <= rho_cap; ++rho) {
    bool ok = true;
    for (const Int& m : amod)
      if (circ_distance(rho * m, modulus) * (lambda + 1) > modulus) {
        ok = false;
        break;
      }
    if (ok) return rho;
  }
  return std::nullopt;
}

std::optional<CondenseStep> condense_step(const IntSet& a, const PolySystem& p,
                                          CondenseMode mode,
                                          const Budget& budget) {
  const Int lambda = system_height(p);
  const Int cap = int_pow(lambda + 1, a.card());

  switch (mode) {
    case CondenseMode::thm31: {
      if (!p.is_linear())
        throw input_error("thm31 mode needs a linear system");
      if (cap > Int(budget.max_lcm_bound))
        throw budget_error("(Lambda+1)^card for lcm table", cap,
                           Int(budget.max_lcm_bound));
      if (cap > budget.max_box_cap)
        throw budget_error("box principle scan", cap, budget.max_box_cap);
      Int upsilon = compute_upsilon(a, p, budget);
      Int L = lcm_upto(cap.convert_to<std::uint64_t>());
      // A multiplier rho <= cap with ||rho*a/(pi*L)|| <= 1/(lambda+1) for
      // every element exists by the box principle. Folding rho into the
      // modulus h = pi*L/rho (exact: rho divides L) turns that bound into
      // property (iii) for the plain least-residue map a -> [a mod h].
      // Multiples of pi are skipped because properties (i) and (ii) need pi
      // to survive in h; in the unlikely case every qualifying multiplier
      // is one, a fresh avoiding prime redraws the boxes.
      Int pi = lambda;
      for (unsigned attempt = 0; attempt < 8; ++attempt) {
        pi = find_prime_avoiding(upsilon, pi, false, budget.prime_candidates);
        const Int modulus = pi * L;
        bool saw_qualifying = false;
        for (Int rho = 1; rho <= cap; ++rho) {
          bool ok = true;
          for (const Int& v : a.values())
            if (circ_distance(rho * v, modulus) * (lambda + 1) > modulus) {
              ok = false;
              break;
            }
          if (!ok) continue;
          saw_qualifying = true;
          if (rho % pi == 0) continue;
          if (modulus % rho != 0)
            throw internal_error("rho does not divide pi*L");
          Int h = modulus / rho;
          return finish_theorem_step(a, p, mode, pi, rho, L, h, Int(1),
                                     lambda, budget);
        }
        if (!saw_qualifying)
          throw internal_error("box principle produced no rho within its cap");
      }
      throw internal_error(
          "no usable multiplier after redrawing the avoiding prime");
    }
    case CondenseMode::thm32: {
      if (!p.is_linear() || !p.is_homogeneous())
        throw input_error("thm32 mode needs a homogeneous linear system");
      Int upsilon = compute_upsilon(a, p, budget);
      Int pi = find_prime_avoiding(upsilon, cap, false,
                                   budget.prime_candidates);
      auto rho = box_principle_rho(a, pi, lambda, cap, budget);
      if (!rho)
        throw internal_error("box principle produced no rho within its cap");
      return finish_theorem_step(a, p, mode, pi, *rho, Int(1), pi, *rho,
                                 lambda, budget);
    }
    case CondenseMode::greedy: {
      Int h_cap = 2 * cap;
      auto step = greedy_min_modulus(a, p, h_cap, budget);
      if (!step || step->env_after >= step->env_before) return std::nullopt;
      return step;
    }
  }
  throw internal_error("unknown condensation mode");
}

std::optional<CondenseStep> greedy_min_modulus(const IntSet& a,
                                               const PolySystem& p,
                                               const Int& h_cap,
                                               const Budget& budget) {
  if (!p.is_homogeneous())
    throw input_error("greedy mode needs a homogeneous system");
  const Int lambda = system_height(p);
  const Int rho_cap = int_pow(lambda + 1, a.card());
  const auto n = static_cast<std::uint32_t>(a.card());
  const std::uint32_t s = p.arity();

  // Non-solution tuples are the same for every modulus; enumerate them once.
  budget.charge_tuples(int_pow(Int(n), s), "greedy scan card^s");
  std::vector<std::vector<std::uint32_t>> nonsol;
  {
    std::vector<std::uint32_t> idx(s, 0);
    std::vector<Int> x(s);
    do {
      for (std::uint32_t j = 0; j < s; ++j) x[j] = a[idx[j]];
      if (!p.all_vanish(x)) nonsol.push_back(idx);
    } while (next_index_tuple(idx, n));
  }
  std::vector<std::uint32_t> degrees;
  for (const auto& poly : p.polys()) degrees.push_back(poly.degree());

  Int scan_budget_used = 0;
  for (Int h = 2; h <= h_cap; ++h) {
    std::vector<Int> amod(n);
    for (std::uint32_t i = 0; i < n; ++i) amod[i] = mod_floor(a[i], h);

    // Distinct per-tuple value vectors (P_1,...,P_r) mod h over the
    // non-solution tuples. P_l(psi a) ≡ rho^deg(P_l) P_l(a) by homogeneity.
    std::set<std::vector<Int>> nonsol_vals;
    {
      std::vector<Int> y(s), vals(p.size());
      for (const auto& t : nonsol) {
        for (std::uint32_t j = 0; j < s; ++j) y[j] = amod[t[j]];
        for (std::uint64_t l = 0; l < p.size(); ++l)
          vals[l] = mod_floor(p[l].eval(y), h);
        nonsol_vals.insert(vals);
      }
    }

    Int rho_hi = rho_cap < h ? rho_cap : h;
    scan_budget_used += rho_hi;
    if (scan_budget_used > budget.max_box_cap)
      throw budget_error("greedy modulus scan", scan_budget_used,
                         budget.max_box_cap);

    for (Int rho = 1; rho <= rho_hi; ++rho) {
      // (iii) first: it eliminates almost every rho cheaply.
      bool ok = true;
      for (std::uint32_t i = 0; i < n && ok; ++i)
        ok = circ_distance(rho * amod[i], h) * (lambda + 1) <= h;
      if (!ok) continue;
      // (i) injectivity mod h.
      std::vector<Int> res(n);
      for (std::uint32_t i = 0; i < n; ++i) res[i] = mod_floor(rho * amod[i], h);
      std::vector<Int> sorted = res;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;
      // (ii) non-solutions stay nonzero somewhere mod h.
      std::vector<Int> rho_pow(p.size());
      for (std::uint64_t l = 0; l < p.size(); ++l)
        rho_pow[l] = pow(rho, degrees[l]) % h;
      for (const auto& vals : nonsol_vals) {
        bool some_nonzero = false;
        for (std::uint64_t l = 0; l < p.size() && !some_nonzero; ++l)
          some_nonzero = (rho_pow[l] * vals[l]) % h != 0;
        if (!some_nonzero) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // Survivor: run the full two-sided check.
      MapTable psi = residue_map(a, rho, h);
      if (!is_freiman_iso(psi, a, p, budget).yes) continue;
      Int env_before = a.env();
      Int env_after = psi.image_set().env();
      return CondenseStep{CondenseMode::greedy, Int(0), rho, Int(1), h,
                          std::move(psi), env_before, env_after};
    }
  }
  return std::nullopt;
}

CondenseTrace condense_iterate(const IntSet& a, const PolySystem& p,
                               CondenseMode mode, unsigned max_steps,
                               const Budget& budget,
                               std::optional<Int> target_env) {
  if (!target_env && mode == CondenseMode::thm32)
    target_env = int_pow(system_height(p) + 1, a.card());

  CondenseTrace trace{a, a, {}, MapTable::identity(a),
                      StopReason::no_strict_decrease};
  IntSet cur = a;
  for (;;) {
    if (target_env && cur.env() <= *target_env) {
      trace.stop_reason = StopReason::target_reached;
      break;
    }
    if (trace.steps.size() >= max_steps) {
      trace.stop_reason = StopReason::budget;
      break;
    }
    auto step = condense_step(cur, p, mode, budget);
    if (!step) {
      trace.stop_reason = StopReason::no_strict_decrease;
      break;
    }
    cur = step->map.image_set();
    trace.composed = step->map.compose_after(trace.composed);
    trace.steps.push_back(std::move(*step));
  }
  trace.final_set = cur;
  if (!is_freiman_iso(trace.composed, a, p, budget).yes)
    throw internal_error("composed condensation map failed verification");
  return trace;
}

}  // namespace freicond
