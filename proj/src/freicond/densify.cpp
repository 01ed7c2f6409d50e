#include "freicond/densify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "freicond/primes.hpp"
#include "freicond/solutions.hpp"

namespace freicond {

namespace {

Int ceil_to_int(const BigFloat& v) {
  return boost::multiprecision::ceil(v).convert_to<Int>();
}

void validate_eps(const Int& eps_num, const Int& eps_den) {
  if (eps_num < 1 || eps_den < 1)
    throw input_error("epsilon must be a positive rational");
  if (8 * eps_num >= eps_den)
    throw input_error("epsilon must be strictly below 1/8");
  if (eps_den > 10000)
    throw input_error("epsilon denominator capped at 10000");
}

template <typename F>
F log_ratio_as(const Int& env, const Int& card) {
  return log(F(env)) / log(F(card));
}

// Solution indicator over dset^s, indexed by row code
// sum_j idx_j * n^(s-1-j).
std::vector<bool> solution_bitmap(const IntSet& dset, const PolySystem& p,
                                  const Budget& budget, std::uint64_t* ns_out) {
  const std::uint32_t n = static_cast<std::uint32_t>(dset.card());
  const std::uint32_t s = p.arity();
  Int ns_big = int_pow(Int(n), s);
  budget.charge_tuples(ns_big, "solution indicator enumeration");
  std::uint64_t ns = ns_big.convert_to<std::uint64_t>();
  std::vector<bool> bit(ns, false);
  SolutionSet sols = solution_set(dset, p, budget);
  for (const auto& t : sols.tuples()) {
    std::uint64_t code = 0;
    for (std::uint32_t v : t) code = code * n + v;
    bit[code] = true;
  }
  if (ns_out) *ns_out = ns;
  return bit;
}

}  // namespace

LogRatio make_log_ratio(const Int& env, const Int& card) {
  if (card < 2) throw input_error("log ratio undefined for card < 2");
  if (env < 1) throw input_error("log ratio needs env >= 1");
  return LogRatio{env, card, log_ratio_as<BigFloat>(env, card)};
}

std::pair<std::vector<Int>, Int> find_d_primes(const Int& u,
                                               std::uint32_t d_count,
                                               const Int& y_start,
                                               const Budget& budget) {
  if (d_count == 0) throw input_error("need at least one prime");
  if (u < 1) throw input_error("the avoided integer must be positive");
  Int y = y_start < 2 ? Int(2) : y_start;
  std::uint64_t tested = 0;
  for (unsigned round = 0; round <= budget.window_doublings; ++round) {
    std::vector<Int> found;
    for (Int c = y + 1; c <= 2 * y; ++c) {
      if (++tested > budget.prime_candidates)
        throw budget_error("prime window candidates", Int(tested),
                           Int(budget.prime_candidates));
      if (c % 2 == 0 && c != 2) continue;
      if (!is_prime(c)) continue;
      if (u % c == 0) continue;
      found.push_back(c);
      if (found.size() == d_count) return {std::move(found), y};
    }
    y *= 2;
  }
  throw budget_error("prime window doublings", Int(budget.window_doublings) + 1,
                     Int(budget.window_doublings));
}

Int omega_map(const std::vector<Int>& d, const std::vector<Int>& primes) {
  if (d.size() != primes.size())
    throw input_error("omega needs one coordinate per prime");
  Int m_all = 1;
  for (const Int& pi : primes) m_all *= pi;
  Int v = 0;
  for (std::size_t i = 0; i < d.size(); ++i) v += d[i] * (m_all / primes[i]);
  return v;
}

DensifyStep densify_step(const IntSet& dset, const PolySystem& p,
                         const DensifyOptions& opts) {
  if (!p.is_linear() || !p.is_homogeneous())
    throw input_error("densification requires a homogeneous linear system");
  if (dset.card() < 2) throw input_error("densification requires card >= 2");
  const std::uint32_t n = static_cast<std::uint32_t>(dset.card());
  const std::uint32_t s = p.arity();
  const std::uint32_t d_count = n;  // fold equals the cardinality

  // Analytic window floor ceil(4 * D^s * ln(r * Lambda * X)), with the log
  // argument clamped upward so it stays positive on degenerate inputs.
  Int arg = Int(p.size()) * p.norm1_max() * (dset.env() - 1);
  if (arg < 3) arg = 3;
  Int y_floor = ceil_to_int(BigFloat(4) * BigFloat(int_pow(Int(n), s)) *
                            log(BigFloat(arg)));
  Int y_begin = opts.y_start > y_floor ? opts.y_start : y_floor;

  Int upsilon = compute_upsilon(dset, p, opts.budget);
  auto [primes, y_used] = find_d_primes(upsilon, d_count, y_begin, opts.budget);

  Int m_all = 1;
  for (const Int& pi : primes) m_all *= pi;
  std::vector<Int> q(d_count);
  for (std::uint32_t i = 0; i < d_count; ++i) q[i] = m_all / primes[i];

  Int tuple_count = int_pow(Int(n), d_count);
  opts.budget.charge_tuples(tuple_count, "densification image enumeration");
  std::vector<std::pair<std::vector<Int>, Int>> entries;
  entries.reserve(tuple_count.convert_to<std::size_t>());
  std::vector<std::uint32_t> idx(d_count, 0);
  do {
    std::vector<Int> key(d_count);
    Int v = 0;
    for (std::uint32_t i = 0; i < d_count; ++i) {
      key[i] = dset[idx[i]];
      v += key[i] * q[i];
    }
    entries.emplace_back(std::move(key), std::move(v));
  } while (next_index_tuple(idx, n));

  MapTable omega = [&] {
    try {
      return MapTable::t_fold(d_count, std::move(entries));
    } catch (const input_error& e) {
      throw internal_error(std::string("densification image not injective: ") +
                           e.what());
    }
  }();
  IntSet output = omega.image_set();

  Int env_bound = Int(d_count) * int_pow(2 * y_used, d_count - 1) * dset.env();
  if (output.env() > env_bound)
    throw internal_error("densified envelope exceeds its proven bound");

  DensifyVerify mode = opts.verify;
  if (mode == DensifyVerify::automatic)
    mode = n <= 3 ? DensifyVerify::full : DensifyVerify::sample;

  bool count_checked = false;
  auto run_count_identity = [&] {
    SolutionSet before = solution_set(dset, p, opts.budget);
    SolutionSet after = solution_set(output, p, opts.budget);
    if (Int(after.size()) != int_pow(Int(before.size()), d_count))
      throw internal_error("densification counting identity failed");
    count_checked = true;
  };

  switch (mode) {
    case DensifyVerify::full: {
      IsoVerdict v = is_tfold_freiman_iso(omega, dset, p, opts.budget);
      if (!v.yes)
        throw internal_error("densification witness failed full verification");
      if (int_pow(Int(output.card()), s) <= opts.budget.max_tuples)
        run_count_identity();
      break;
    }
    case DensifyVerify::count:
      run_count_identity();
      break;
    case DensifyVerify::sample: {
      std::uint64_t ns = 0;
      std::vector<bool> solbit = solution_bitmap(dset, p, opts.budget, &ns);
      std::mt19937_64 rng(0x667265696d616eULL);
      std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
      std::vector<std::uint32_t> flat(std::size_t(d_count) * s);
      std::vector<Int> slice(d_count);
      std::vector<Int> image(s);
      for (std::uint64_t trial = 0; trial < opts.sample_count; ++trial) {
        for (auto& c : flat) c = pick(rng);
        bool lhs = true;
        for (std::uint32_t i = 0; i < d_count && lhs; ++i) {
          std::uint64_t code = 0;
          for (std::uint32_t j = 0; j < s; ++j)
            code = code * n + flat[std::size_t(i) * s + j];
          lhs = solbit[code];
        }
        for (std::uint32_t j = 0; j < s; ++j) {
          for (std::uint32_t i = 0; i < d_count; ++i)
            slice[i] = dset[flat[std::size_t(i) * s + j]];
          image[j] = omega.apply_tuple(slice);
        }
        if (lhs != p.all_vanish(image))
          throw internal_error(
              "densification witness failed a sampled slice check");
      }
      if (int_pow(Int(output.card()), s) <= opts.budget.max_tuples)
        run_count_identity();
      break;
    }
    case DensifyVerify::automatic:
      throw internal_error("unresolved verification mode");
  }

  return DensifyStep{std::move(primes),
                     std::move(y_used),
                     dset,
                     output,
                     std::move(omega),
                     make_log_ratio(dset.env(), Int(dset.card())),
                     make_log_ratio(output.env(), Int(output.card())),
                     mode,
                     count_checked,
                     std::move(env_bound)};
}

bool densify_should_continue(const IntSet& a, std::uint32_t s,
                             const Int& eps_num, const Int& eps_den) {
  validate_eps(eps_num, eps_den);
  // env > card^(s(1 + 4 eps)) iff env^q > card^(s(q + 4p)).
  std::uint64_t q = eps_den.convert_to<std::uint64_t>();
  std::uint64_t e_rhs =
      (Int(s) * (eps_den + 4 * eps_num)).convert_to<std::uint64_t>();
  return int_pow(a.env(), q) > int_pow(Int(a.card()), e_rhs);
}

DensifyRun densify_iterate(const IntSet& a, const PolySystem& p,
                           const Int& eps_num, const Int& eps_den,
                           unsigned max_steps, const DensifyOptions& opts) {
  validate_eps(eps_num, eps_den);
  if (!p.is_linear() || !p.is_homogeneous())
    throw input_error("densification requires a homogeneous linear system");
  DensifyRun run{a, a, {}, StopReason::target_reached, false};
  IntSet cur = a;
  for (;;) {
    if (!densify_should_continue(cur, p.arity(), eps_num, eps_den)) {
      run.stop_reason = StopReason::target_reached;
      run.target_reached = true;
      break;
    }
    if (run.steps.size() >= max_steps) {
      run.stop_reason = StopReason::budget;
      break;
    }
    DensifyStep st = densify_step(cur, p, opts);
    cur = st.output;
    run.steps.push_back(std::move(st));
  }
  run.final_set = cur;
  return run;
}

Int compute_upsilon_per_poly(const IntSet& a, const PolySystem& p,
                             const Budget& budget) {
  Int u = 1;
  for (std::uint64_t i = 0; i < a.card(); ++i)
    for (std::uint64_t j = 0; j < a.card(); ++j)
      if (i != j) u *= abs(a[i] - a[j]);
  const std::uint32_t n = static_cast<std::uint32_t>(a.card());
  const std::uint32_t s = p.arity();
  budget.charge_tuples(int_pow(Int(n), s), "obstruction product enumeration");
  std::vector<std::uint32_t> idx(s, 0);
  std::vector<Int> point(s);
  do {
    for (std::uint32_t j = 0; j < s; ++j) point[j] = a[idx[j]];
    for (std::uint64_t l = 0; l < p.size(); ++l) {
      Int v = p[l].eval(point);
      if (v != 0) u *= abs(v);
    }
  } while (next_index_tuple(idx, n));
  return u;
}

namespace {

// Bit-parallel path for diagonal systems with a word-sized modulus: iterate
// over index tuples of output elements, keeping per-polynomial partial sums
// mod M and per-fold-row prefix codes, and compare the admissible last
// coordinates (a solution-indicator mask per fold row, ANDed) against the
// residue-matching mask.
struct FastCheck {
  std::uint32_t n, s, t, r, deg;
  std::uint64_t nt;     // n^t, number of output elements
  std::uint64_t words;  // bitset words over nt
  std::uint64_t m64;
  std::vector<std::uint8_t> dig;        // dig[k * nt + c]: fold-row digit
  std::vector<std::uint64_t> contrib;   // contrib[(l*s + j)*nt + c]
  std::vector<std::uint64_t> lhs_mask;  // [k][prefix][word]
  std::uint64_t npref;                  // n^(s-1)
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> rhs_masks;
  bool ok = true;

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                              std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
  }

  bool descend(std::uint32_t j, std::vector<std::uint64_t>& partial,
               std::vector<std::uint64_t>& pref) {
    if (j == s - 1) {
      std::vector<std::uint64_t> target(r);
      for (std::uint32_t l = 0; l < r; ++l)
        target[l] = (m64 - partial[l]) % m64;
      auto it = rhs_masks.find(target);
      for (std::uint64_t w = 0; w < words; ++w) {
        std::uint64_t lhs = lhs_mask[((0 * npref) + pref[0]) * words + w];
        for (std::uint32_t k = 1; k < t; ++k)
          lhs &= lhs_mask[(std::uint64_t(k) * npref + pref[k]) * words + w];
        std::uint64_t rhs = it == rhs_masks.end() ? 0 : it->second[w];
        if (lhs != rhs) return false;
      }
      return true;
    }
    std::vector<std::uint64_t> part2(r);
    std::vector<std::uint64_t> pref2(t);
    for (std::uint64_t c = 0; c < nt; ++c) {
      for (std::uint32_t l = 0; l < r; ++l)
        part2[l] = (partial[l] + contrib[(std::uint64_t(l) * s + j) * nt + c]) %
                   m64;
      for (std::uint32_t k = 0; k < t; ++k)
        pref2[k] = pref[k] * n + dig[std::uint64_t(k) * nt + c];
      if (!descend(j + 1, part2, pref2)) return false;
    }
    return true;
  }
};

bool modular_check_fast(const IntSet& dset, const PolySystem& p,
                        const std::vector<Int>& primes, const Int& m_all,
                        const std::vector<bool>& solbit) {
  FastCheck fc;
  fc.n = static_cast<std::uint32_t>(dset.card());
  fc.s = p.arity();
  fc.t = static_cast<std::uint32_t>(primes.size());
  fc.r = static_cast<std::uint32_t>(p.size());
  fc.deg = *p.diagonal_degree();
  fc.m64 = m_all.convert_to<std::uint64_t>();
  Int nt_big = int_pow(Int(fc.n), fc.t);
  fc.nt = nt_big.convert_to<std::uint64_t>();
  fc.words = (fc.nt + 63) / 64;
  fc.npref = 1;
  for (std::uint32_t j = 0; j + 1 < fc.s; ++j) fc.npref *= fc.n;

  // Fold-row digits and omega values mod M per output-element code.
  fc.dig.resize(std::uint64_t(fc.t) * fc.nt);
  std::vector<std::uint64_t> pw(fc.nt);
  std::vector<Int> qmod(fc.t);
  {
    for (std::uint32_t i = 0; i < fc.t; ++i) qmod[i] = m_all / primes[i];
    for (std::uint64_t c = 0; c < fc.nt; ++c) {
      std::uint64_t rem = c;
      Int val = 0;
      for (std::uint32_t k = fc.t; k-- > 0;) {
        std::uint32_t d = static_cast<std::uint32_t>(rem % fc.n);
        rem /= fc.n;
        fc.dig[std::uint64_t(k) * fc.nt + c] = static_cast<std::uint8_t>(d);
        val += dset[d] * qmod[k];
      }
      std::uint64_t vm = mod_floor(val, m_all).convert_to<std::uint64_t>();
      std::uint64_t e = vm % fc.m64, acc = 1;
      for (std::uint32_t x = 0; x < fc.deg; ++x)
        acc = FastCheck::mulmod(acc, e, fc.m64);
      pw[c] = acc;
    }
  }

  fc.contrib.resize(std::uint64_t(fc.r) * fc.s * fc.nt);
  for (std::uint32_t l = 0; l < fc.r; ++l)
    for (std::uint32_t j = 0; j < fc.s; ++j) {
      std::uint64_t cm =
          mod_floor(p[l].single_var_coeff(j), m_all).convert_to<std::uint64_t>();
      for (std::uint64_t c = 0; c < fc.nt; ++c)
        fc.contrib[(std::uint64_t(l) * fc.s + j) * fc.nt + c] =
            FastCheck::mulmod(cm, pw[c], fc.m64);
    }

  // Admissible-last-coordinate masks per fold row and row prefix.
  fc.lhs_mask.assign(std::uint64_t(fc.t) * fc.npref * fc.words, 0);
  for (std::uint32_t k = 0; k < fc.t; ++k)
    for (std::uint64_t pref = 0; pref < fc.npref; ++pref)
      for (std::uint64_t c = 0; c < fc.nt; ++c)
        if (solbit[pref * fc.n + fc.dig[std::uint64_t(k) * fc.nt + c]])
          fc.lhs_mask[(std::uint64_t(k) * fc.npref + pref) * fc.words +
                      c / 64] |= std::uint64_t(1) << (c % 64);

  // Group last-coordinate codes by their residue-contribution vector.
  for (std::uint64_t c = 0; c < fc.nt; ++c) {
    std::vector<std::uint64_t> key(fc.r);
    for (std::uint32_t l = 0; l < fc.r; ++l)
      key[l] = fc.contrib[(std::uint64_t(l) * fc.s + (fc.s - 1)) * fc.nt + c];
    auto& mask = fc.rhs_masks[key];
    if (mask.empty()) mask.assign(fc.words, 0);
    mask[c / 64] |= std::uint64_t(1) << (c % 64);
  }

  std::vector<std::uint64_t> partial(fc.r, 0), pref(fc.t, 0);
  return fc.descend(0, partial, pref);
}

}  // namespace

bool modular_preservation_check(const IntSet& dset, const PolySystem& p,
                                const std::vector<Int>& primes,
                                const Budget& budget, bool force_generic) {
  if (!p.is_homogeneous())
    throw input_error("modular preservation needs a homogeneous system");
  if (primes.empty()) throw input_error("need at least one prime modulus");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw input_error("moduli must be prime");
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (primes[i] == primes[j])
        throw input_error("moduli must be distinct primes");
  }
  Int uper = compute_upsilon_per_poly(dset, p, budget);
  for (const Int& pi : primes)
    if (uper % pi == 0)
      throw input_error("prime divides the obstruction product");

  const std::uint32_t n = static_cast<std::uint32_t>(dset.card());
  const std::uint32_t s = p.arity();
  const std::uint32_t t = static_cast<std::uint32_t>(primes.size());
  Int m_all = 1;
  for (const Int& pi : primes) m_all *= pi;

  Int total = int_pow(int_pow(Int(n), s), t);
  budget.charge_tuples(total, "modular preservation enumeration");
  std::uint64_t ns = 0;
  std::vector<bool> solbit = solution_bitmap(dset, p, budget, &ns);

  Int nt_big = int_pow(Int(n), t);
  Int npref_big = s == 0 ? Int(1) : int_pow(Int(n), s - 1);
  Int mask_words = Int(t) * npref_big * ((nt_big + 63) / 64);
  bool fast_ok = !force_generic && p.diagonal_degree().has_value() &&
                 m_all < (Int(1) << 62) && nt_big <= 32768 &&
                 mask_words <= (Int(1) << 21) &&
                 Int(p.size()) * s * nt_big <= (Int(1) << 23);
  if (fast_ok) return modular_check_fast(dset, p, primes, m_all, solbit);

  // Reference path: flattened odometer over (x_1, ..., x_t) in (dset^s)^t.
  std::vector<Int> qmod(t);
  for (std::uint32_t i = 0; i < t; ++i) qmod[i] = m_all / primes[i];
  std::uint64_t nt = nt_big.convert_to<std::uint64_t>();
  std::vector<Int> omega_val(nt);
  for (std::uint64_t c = 0; c < nt; ++c) {
    std::uint64_t rem = c;
    Int val = 0;
    for (std::uint32_t k = t; k-- > 0;) {
      val += dset[rem % n] * qmod[k];
      rem /= n;
    }
    omega_val[c] = val;
  }

  std::vector<std::uint32_t> flat(std::size_t(t) * s, 0);
  std::vector<Int> image(s);
  do {
    bool lhs = true;
    for (std::uint32_t i = 0; i < t && lhs; ++i) {
      std::uint64_t code = 0;
      for (std::uint32_t j = 0; j < s; ++j)
        code = code * n + flat[std::size_t(i) * s + j];
      lhs = solbit[code];
    }
    for (std::uint32_t j = 0; j < s; ++j) {
      std::uint64_t slice = 0;
      for (std::uint32_t i = 0; i < t; ++i)
        slice = slice * n + flat[std::size_t(i) * s + j];
      image[j] = omega_val[slice];
    }
    bool rhs = true;
    for (std::uint64_t l = 0; l < p.size() && rhs; ++l)
      rhs = mod_floor(p[l].eval(image), m_all) == 0;
    if (lhs != rhs) return false;
  } while (next_index_tuple(flat, n));
  return true;
}

StepConditions check_step_conditions(const DensifyStep& step,
                                     const Int& eps_num, const Int& eps_den) {
  validate_eps(eps_num, eps_den);
  std::uint64_t q = eps_den.convert_to<std::uint64_t>();
  std::uint64_t e_rhs = (eps_den - 2 * eps_num).convert_to<std::uint64_t>();
  bool c75 =
      int_pow(2 * step.y_used, q) <= int_pow(step.input.env(), e_rhs);

  auto eval76 = [&]<typename F>(F) -> std::pair<F, F> {
    F lhs = log_ratio_as<F>(step.output.env(), Int(step.output.card()));
    F rhs = (F(eps_den - eps_num) / F(eps_den)) *
            log_ratio_as<F>(step.input.env(), Int(step.input.card()));
    return {lhs, rhs};
  };
  auto [lhs_n, rhs_n] = eval76(BigFloat(0));
  auto [lhs_w, rhs_w] = eval76(BigFloatWide(0));

  BigFloatWide err = abs(BigFloatWide(lhs_n) - lhs_w) +
                     abs(BigFloatWide(rhs_n) - rhs_w) +
                     ldexp(BigFloatWide(1), -250);
  BigFloatWide margin = abs(rhs_w - lhs_w);
  if (margin <= 64 * err)
    throw internal_error(
        "ratio comparison margin does not dominate the evaluation error");
  return StepConditions{c75,
                        lhs_w <= rhs_w,
                        lhs_n,
                        rhs_n,
                        BigFloat(margin),
                        BigFloat(err)};
}

}  // namespace freicond
