#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freicond/densify.hpp"
#include "freicond/errors.hpp"
#include "freicond/freiman.hpp"
#include "freicond/ints.hpp"
#include "freicond/solutions.hpp"
#include "helpers.hpp"

using namespace freicond;
using fct::ap_system;

TEST_CASE("prime windows double until one interval suffices") {
  // with nothing to avoid, the first (y,2y] window holding three odd
  // primes is (16,32]
  auto [primes, y] = find_d_primes(Int(1), 3, Int(2));
  CHECK(y == 16);
  CHECK(primes == std::vector<Int>{Int(17), Int(19), Int(23)});

  // avoiding 17*19*23 leaves only two qualifying primes in (16,32], so the
  // window doubles once more
  auto [primes2, y2] = find_d_primes(Int(17) * 19 * 23, 3, Int(2));
  CHECK(y2 == 32);
  CHECK(primes2 == std::vector<Int>{Int(37), Int(41), Int(43)});

  CHECK_THROWS_AS(find_d_primes(Int(0), 2, Int(2)), input_error);
  CHECK_THROWS_AS(find_d_primes(Int(1), 0, Int(2)), input_error);

  // an impossible demand exhausts the window-doubling budget
  Budget b;
  b.window_doublings = 1;
  b.prime_candidates = 30;
  CHECK_THROWS_AS(find_d_primes(Int(1), 10, Int(2), b), budget_error);
}

TEST_CASE("omega is the standard residue-spreading combination") {
  // omega(d) = sum_i d_i * prod_{j != i} pi_j
  CHECK(omega_map({Int(1), Int(2)}, {Int(3), Int(5)}) == 11);  // 1*5 + 2*3
  CHECK(omega_map({Int(0), Int(0), Int(0)},
                  {Int(17), Int(19), Int(23)}) == 0);
  CHECK(omega_map({Int(1), Int(1)}, {Int(3), Int(5)}) == 8);
  CHECK_THROWS_AS(omega_map({Int(1)}, {Int(3), Int(5)}), input_error);
}

TEST_CASE("one densification step on the progression-free triple") {
  PolySystem ap = ap_system();
  IntSet d({Int(0), Int(1), Int(3)});
  auto before = solution_set(d, ap);
  CHECK(before.size() == 3);  // diagonal only

  DensifyOptions opts;
  opts.verify = DensifyVerify::full;
  DensifyStep step = densify_step(d, ap, opts);

  // the output is the full third power of the input under omega
  CHECK(step.output.card() == 27);
  CHECK(step.omega.fold() == 3);
  CHECK(step.omega.kind() == MapTable::Kind::t_fold);
  CHECK(step.verify_used == DensifyVerify::full);
  CHECK(step.count_identity_checked);
  REQUIRE(step.primes.size() == 3);
  for (const auto& pi : step.primes) {
    CHECK(pi > step.y_used);
    CHECK(pi <= 2 * step.y_used);
  }

  // |S(out)| = |S(in)|^3 by independent full enumeration
  CHECK(solution_set(step.output, ap).size() == 27);

  // the t_fold witness verifies independently as well
  CHECK(is_tfold_freiman_iso(step.omega, d, ap).yes);

  // table entries agree with the omega formula
  CHECK(step.omega.apply_tuple({Int(1), Int(3), Int(0)}) ==
        omega_map({Int(1), Int(3), Int(0)}, step.primes));

  // the envelope bound D*(2Y)^(D-1)*env is honored
  CHECK(step.output.env() <= step.env_bound);
}

TEST_CASE("sampled verification with the counting identity skipped") {
  PolySystem ap = ap_system();
  IntSet d({Int(0), Int(1), Int(3), Int(7)});  // progression-free
  auto before = solution_set(d, ap);
  CHECK(before.size() == 4);

  DensifyOptions opts;
  opts.verify = DensifyVerify::sample;
  opts.budget.max_tuples = 1000000;  // 256^3 is over, identity skipped
  DensifyStep step = densify_step(d, ap, opts);
  CHECK(step.output.card() == 256);  // 4^4, omega stays injective
  CHECK(step.omega.fold() == 4);
  CHECK(step.verify_used == DensifyVerify::sample);
  CHECK_FALSE(step.count_identity_checked);

  // spot check: an AP slice maps to an AP in the image
  std::vector<Int> x1, x2, x3;
  for (std::uint32_t i = 0; i < 4; ++i) {
    x1.push_back(d[i]);
    x2.push_back(d[i]);
    x3.push_back(d[i]);
  }
  std::vector<Int> img = {step.omega.apply_tuple(x1),
                          step.omega.apply_tuple(x2),
                          step.omega.apply_tuple(x3)};
  CHECK(ap[0].eval(img) == 0);
}

TEST_CASE("count-identity verification mode") {
  PolySystem ap = ap_system();
  IntSet d({Int(0), Int(1), Int(3)});
  DensifyOptions opts;
  opts.verify = DensifyVerify::count;
  DensifyStep step = densify_step(d, ap, opts);
  CHECK(step.verify_used == DensifyVerify::count);
  CHECK(step.count_identity_checked);
  CHECK(step.output.card() == 27);
}

TEST_CASE("step conditions on a wide input") {
  PolySystem ap = ap_system();
  Int e12 = int_pow(Int(10), 12);
  IntSet d({Int(0), e12, 3 * e12});
  DensifyStep step = densify_step(d, ap);

  // only genuinely wide sets densify: log env / log card drops
  CHECK(step.ratio_after.value < step.ratio_before.value);

  auto c = check_step_conditions(step, Int(1), Int(10));
  CHECK(c.cond75);
  CHECK(c.cond76);
  CHECK(c.lhs76 < c.rhs76);
  CHECK(c.margin > c.err_bound);
  // the evaluation error is astronomically below the decision margin
  CHECK(c.err_bound * 1000000 < c.margin);
}

TEST_CASE("continuation rule compares exact integer powers") {
  // continue while env^q > card^(s(q+4p)) with eps = p/q
  CHECK_FALSE(densify_should_continue(IntSet({Int(0), Int(1), Int(3)}), 3,
                                      Int(1), Int(10)));
  Int e12 = int_pow(Int(10), 12);
  CHECK(densify_should_continue(IntSet({Int(0), e12, 3 * e12}), 3, Int(1),
                                Int(10)));

  // exact boundary: card 2, s 10, eps 1/10 puts the threshold at
  // env^10 = 2^140, i.e. env = 16384; equality must NOT continue
  CHECK_FALSE(densify_should_continue(IntSet({Int(0), Int(16383)}), 10,
                                      Int(1), Int(10)));
  CHECK(densify_should_continue(IntSet({Int(0), Int(16384)}), 10, Int(1),
                                Int(10)));
}

TEST_CASE("iteration stops as soon as the target density holds") {
  PolySystem ap = ap_system();

  // already dense: zero steps
  IntSet a({Int(0), Int(1), Int(3)});
  DensifyRun run = densify_iterate(a, ap, Int(1), Int(10), 8);
  CHECK(run.target_reached);
  CHECK(run.stop_reason == StopReason::target_reached);
  CHECK(run.steps.empty());
  CHECK(run.final_set == a);

  // wide: one step allowed, the cap stops the run before the target
  Int e12 = int_pow(Int(10), 12);
  IntSet w({Int(0), e12, 3 * e12});
  DensifyRun wide = densify_iterate(w, ap, Int(1), Int(10), 1);
  CHECK_FALSE(wide.target_reached);
  CHECK(wide.stop_reason == StopReason::budget);
  REQUIRE(wide.steps.size() == 1);
  CHECK(wide.final_set == wide.steps[0].output);
  CHECK(wide.steps[0].ratio_after.value < wide.steps[0].ratio_before.value);
}

TEST_CASE("epsilon validation") {
  PolySystem ap = ap_system();
  IntSet a({Int(0), Int(1), Int(3)});
  CHECK_THROWS_AS(densify_iterate(a, ap, Int(1), Int(8), 1), input_error);
  CHECK_THROWS_AS(densify_iterate(a, ap, Int(0), Int(10), 1), input_error);
  CHECK_THROWS_AS(densify_iterate(a, ap, Int(-1), Int(10), 1), input_error);
  CHECK_THROWS_AS(densify_iterate(a, ap, Int(1), Int(20000), 1), input_error);
  // 1/9 is the largest simple admissible value
  CHECK_FALSE(densify_should_continue(a, 3, Int(1), Int(9)));
  CHECK_THROWS_AS(densify_should_continue(a, 3, Int(1), Int(8)), input_error);
}

TEST_CASE("densification rejects unsupported systems") {
  IntSet a({Int(0), Int(1), Int(3)});
  CHECK_THROWS_AS(densify_step(a, fct::linear_system({1, 1, -1}, -1)),
                  input_error);
  CHECK_THROWS_AS(densify_step(a, fct::sum_squares_system()), input_error);
  CHECK_THROWS_AS(densify_step(IntSet({Int(5)}), ap_system()), input_error);
}

TEST_CASE("per-polynomial obstruction product") {
  PolySystem pair = fct::linear_system({1, -1}, 0);
  CHECK(compute_upsilon_per_poly(IntSet({Int(0), Int(1)}), pair) == 1);
  // {0,2}: ordered differences 2*2, nonzero values 2*2
  CHECK(compute_upsilon_per_poly(IntSet({Int(0), Int(2)}), pair) == 16);
  CHECK(compute_upsilon_per_poly(IntSet({Int(0), Int(3), Int(10)}),
                                 ap_system()) > 0);
}

TEST_CASE("modular preservation: fast path equals the generic path") {
  // homogeneous diagonal systems exercise the bit-parallel path; small
  // instances let the flattened generic enumeration confirm it
  struct Inst {
    std::vector<Int> vals;
    PolySystem p;
  };
  std::vector<Inst> instances;
  instances.push_back(
      {{Int(0), Int(1), Int(2)}, fct::diagonal_system({1, -1}, 2)});
  instances.push_back(
      {{Int(0), Int(2), Int(5)}, fct::diagonal_system({1, -1}, 3)});
  instances.push_back(
      {{Int(1), Int(4)}, fct::diagonal_system({1, 1, -1}, 2)});

  Budget b;
  for (const auto& inst : instances) {
    IntSet d(inst.vals);
    auto [primes, y] =
        find_d_primes(compute_upsilon_per_poly(d, inst.p),
                      static_cast<std::uint32_t>(d.card()), Int(2), b);
    bool fast = modular_preservation_check(d, inst.p, primes, b, false);
    bool generic = modular_preservation_check(d, inst.p, primes, b, true);
    CHECK(fast == generic);
    CHECK(fast);
  }

  // a prime dividing the per-polynomial obstruction is rejected up front
  IntSet d({Int(0), Int(1), Int(2)});
  PolySystem sq = fct::diagonal_system({1, -1}, 2);
  Int ups = compute_upsilon_per_poly(d, sq);
  REQUIRE(ups % 3 == 0);  // 3 divides 1^2 - 2^2
  CHECK_THROWS_AS(
      modular_preservation_check(d, sq, {Int(3), Int(7), Int(11)}, b),
      input_error);
  CHECK_THROWS_AS(
      modular_preservation_check(d, sq, {Int(7), Int(7), Int(11)}, b),
      input_error);
  CHECK_THROWS_AS(
      modular_preservation_check(d, sq, {Int(8), Int(7), Int(11)}, b),
      input_error);

  // non-homogeneous systems are out of scope for the congruence
  CHECK_THROWS_AS(
      modular_preservation_check(d, fct::linear_system({1, -1}, -1),
                                 {Int(5), Int(7)}, b),
      input_error);
}

TEST_CASE("modular preservation on a square system with real solutions") {
  // {0,3,4,5} under x1^2+x2^2-x3^2-x4^2 has the genuine solution
  // 0^2+5^2 = 3^2+4^2, so the congruence has content on both sides
  IntSet d({Int(0), Int(3), Int(4), Int(5)});
  PolySystem sq = fct::sum_squares_system();
  CHECK(solution_set(d, sq).size() > d.card() * d.card());

  Budget b;
  b.max_tuples = Int(1) << 34;  // (4^4)^4 rows, bit-parallel path only
  auto [primes, y] =
      find_d_primes(compute_upsilon_per_poly(d, sq), 4, Int(2), b);
  CHECK(modular_preservation_check(d, sq, primes, b));
}
