#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freicond/errors.hpp"
#include "freicond/meanvalue.hpp"
#include "freicond/solutions.hpp"
#include "helpers.hpp"

using namespace freicond;

namespace {

Poly monomial(std::uint32_t degree) {
  return Poly(1, {Term{Int(1), {degree}}});
}

}  // namespace

TEST_CASE("J_{2,2} is 2n^2 - n for every set of n distinct integers") {
  // equal first and second power sums of a pair force equal multisets, so
  // only the multiset multiplicities matter: n singletons counted once,
  // n(n-1)/2 pairs counted 2^2 times
  CHECK(count_J(IntSet({Int(0), Int(1), Int(2)}), 2, 2) == 15);
  CHECK(count_J(IntSet({Int(0), Int(1), Int(3)}), 2, 2) == 15);
  CHECK(count_J(IntSet({Int(-5), Int(0), Int(1000)}), 2, 2) == 15);
  CHECK(count_J(IntSet({Int(2), Int(3), Int(5), Int(8)}), 2, 2) == 28);
  CHECK(count_J(IntSet({Int(0), Int(1), Int(2), Int(4), Int(9)}), 2, 2) ==
        45);
}

TEST_CASE("degenerate shapes") {
  IntSet a({Int(3), Int(7), Int(20)});
  // s = 1: x = y is forced at every k
  CHECK(count_J(a, 1, 1) == 3);
  CHECK(count_J(a, 1, 3) == 3);
  // card = 1: a single tuple on each side
  CHECK(count_J(IntSet({Int(42)}), 3, 2) == 1);
}

TEST_CASE("moment tally equals the direct 2s-tuple enumeration") {
  fct::Rng rng(20260817);
  const std::pair<std::uint32_t, std::uint32_t> shapes[] = {
      {1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  for (const auto& [s, k] : shapes) {
    for (int trial = 0; trial < 6; ++trial) {
      IntSet a = rng.random_set(2 + trial % 3, -30, 30);
      CAPTURE(s);
      CAPTURE(k);
      CHECK(count_J(a, s, k) == count_J_oracle(a, s, k));
    }
  }
}

TEST_CASE("J counts the solutions of the Vinogradov system") {
  IntSet a({Int(0), Int(1), Int(3)});
  CHECK(solution_set(a, vinogradov_system(2, 2)).size() ==
        count_J(a, 2, 2));
  IntSet b({Int(0), Int(1), Int(2), Int(5)});
  CHECK(solution_set(b, vinogradov_system(2, 1)).size() ==
        count_J(b, 2, 1));
}

TEST_CASE("Vinogradov system shape") {
  PolySystem v = vinogradov_system(3, 2);
  CHECK(v.arity() == 6);
  CHECK(v.size() == 2);
  CHECK(v.is_homogeneous());
  CHECK(v.degree_bound() == 2);
  CHECK_FALSE(v.is_linear());
  // mixed degrees across the polynomials: no common diagonal power
  CHECK_FALSE(v.diagonal_degree().has_value());
  CHECK(vinogradov_system(2, 1).diagonal_degree() == 1);

  // x1^j + x2^j + x3^j - x4^j - x5^j - x6^j at a known point
  std::vector<Int> pt = {Int(1), Int(2), Int(3), Int(3), Int(2), Int(1)};
  CHECK(v[0].eval(pt) == 0);
  CHECK(v[1].eval(pt) == 0);
  CHECK_THROWS_AS(vinogradov_system(0, 2), input_error);
}

TEST_CASE("translation and dilation leave J unchanged") {
  fct::Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    IntSet a = rng.random_set(3, -50, 50);
    Int j = count_J(a, 2, 2);
    CHECK(count_J(a.translated(Int(rng.uniform(-1000, 1000))), 2, 2) == j);
    CHECK(count_J(a.scaled(Int(-3)), 2, 2) == j);
    CHECK(count_J(a.scaled(Int(7)), 2, 2) == j);
  }
  CHECK(translate_to_zero(IntSet({Int(5), Int(9), Int(100)})) ==
        IntSet({Int(0), Int(4), Int(95)}));
  // after translation the envelope equals the original diameter
  IntSet wide({Int(-7), Int(-3)});
  CHECK(translate_to_zero(wide).env() == wide.diam());
}

TEST_CASE("weighted tally reduces to plain powers and beyond") {
  IntSet a({Int(0), Int(1), Int(3), Int(6)});
  CHECK(count_J_phi(a, 2, {monomial(1), monomial(2)}) == count_J(a, 2, 2));
  CHECK(count_J_phi(a, 3, {monomial(1)}) == count_J(a, 3, 1));

  // a single quadratic weight counts x^2+y^2 = z^2+w^2; for {0,3,4,5} the
  // coincidence 3^2+4^2 = 0^2+5^2 adds to the diagonal count
  IntSet pyth({Int(0), Int(3), Int(4), Int(5)});
  Int viaPhi = count_J_phi(pyth, 2, {monomial(2)});
  CHECK(viaPhi == 36);
  CHECK(viaPhi == Int(solution_set(pyth, fct::sum_squares_system()).size()));

  CHECK_THROWS_AS(count_J_phi(a, 2, {}), input_error);
  CHECK_THROWS_AS(count_J_phi(a, 2, {fct::linear_poly({Int(1), Int(1)},
                                                      Int(0))}),
                  input_error);
}

TEST_CASE("bound report") {
  IntSet flat({Int(0), Int(1), Int(2)});
  Int j_flat = count_J(flat, 2, 1);
  CHECK(j_flat == 19);
  BoundReport r = bound_report(flat, 2, 1, j_flat);
  CHECK(r.lower == 9);
  CHECK(r.upper == 81);
  CHECK(r.trivial_ok);
  REQUIRE(r.consecutive_j.has_value());
  CHECK(*r.consecutive_j == 19);  // {1,2,3} has the same additive shape
  CHECK(*r.consecutive_cmp == 0);
  CHECK(r.envelope > 0);

  // a progression-free set has fewer additive coincidences
  IntSet sparse({Int(0), Int(1), Int(3)});
  Int j_sparse = count_J(sparse, 2, 1);
  CHECK(j_sparse == 15);
  BoundReport rs = bound_report(sparse, 2, 1, j_sparse);
  CHECK(*rs.consecutive_cmp == -1);

  // an impossible J fails the trivial envelope
  CHECK_FALSE(bound_report(sparse, 2, 1, Int(5)).trivial_ok);
  CHECK_FALSE(bound_report(sparse, 2, 1, Int(100)).trivial_ok);

  // the consecutive comparison is skipped when it would blow the budget
  Budget tight;
  tight.max_tuples = 8;
  BoundReport rb =
      bound_report(sparse, 2, 1, j_sparse, BigFloat("0.01"), tight);
  CHECK_FALSE(rb.consecutive_j.has_value());
  CHECK_FALSE(rb.consecutive_cmp.has_value());
}

TEST_CASE("parameter validation and budgets") {
  IntSet a({Int(0), Int(1), Int(2)});
  CHECK_THROWS_AS(count_J(a, 0, 1), input_error);
  CHECK_THROWS_AS(count_J(a, 1, 0), input_error);
  CHECK_THROWS_AS(count_J(a, 17, 1), input_error);

  Budget tight;
  tight.max_tuples = 10;
  CHECK_THROWS_AS(count_J(a, 3, 1, tight), budget_error);
  CHECK_THROWS_AS(count_J_oracle(a, 2, 1, tight), budget_error);
  try {
    count_J(a, 3, 1, tight);
    FAIL("expected a budget error");
  } catch (const budget_error& e) {
    CHECK(e.requested() == 27);
    CHECK(e.limit() == 10);
  }
}
