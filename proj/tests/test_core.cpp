#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freicond/errors.hpp"
#include "freicond/formats.hpp"
#include "freicond/intset.hpp"
#include "freicond/ints.hpp"
#include "freicond/polysystem.hpp"
#include "freicond/primes.hpp"
#include "freicond/solutions.hpp"
#include "helpers.hpp"

using namespace freicond;
using fct::ap_system;
using fct::linear_system;

TEST_CASE("integer primitives") {
  CHECK(int_pow(Int(3), 0) == 1);
  CHECK(int_pow(Int(2), 64) == Int(1) << 64);
  CHECK(int_pow(Int(-2), 3) == -8);

  CHECK(iroot(Int(1000000), 2) == 1000);
  CHECK(iroot(Int(999999), 2) == 999);      // floor, not round
  CHECK(iroot(int_pow(Int(10), 60), 3) == int_pow(Int(10), 20));

  CHECK(mod_floor(Int(-7), Int(5)) == 3);
  CHECK(mod_floor(Int(7), Int(5)) == 2);

  // numerically least residue lies in (-h/2, h/2]
  CHECK(least_residue(Int(7), Int(5)) == 2);
  CHECK(least_residue(Int(8), Int(5)) == -2);
  CHECK(least_residue(Int(5), Int(10)) == 5);   // boundary element included
  CHECK(least_residue(Int(-5), Int(10)) == 5);

  CHECK(circ_distance(Int(9), Int(10)) == 1);
  CHECK(circ_distance(Int(4), Int(10)) == 4);

  CHECK(lcm_upto(1) == 1);
  CHECK(lcm_upto(10) == 2520);
}

TEST_CASE("deterministic primality") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(3)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(0)));
  CHECK_FALSE(is_prime(Int(-7)));

  // cross-check against a sieve up to 2000
  std::vector<bool> comp(2001, false);
  for (int i = 2; i <= 2000; ++i)
    if (!comp[i])
      for (int j = 2 * i; j <= 2000; j += i) comp[j] = true;
  for (int n = 2; n <= 2000; ++n) CHECK(is_prime(Int(n)) == !comp[n]);

  // Carmichael numbers and strong-pseudoprime bait
  CHECK_FALSE(is_prime(Int(561)));
  CHECK_FALSE(is_prime(Int(1729)));
  CHECK_FALSE(is_prime(Int("3215031751")));
  CHECK(is_prime(Int("2305843009213693951")));  // 2^61 - 1
  CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127-1
}

TEST_CASE("prime search avoiding a product") {
  // smallest prime > 10 not dividing 2*3*5*7*11*13 is 17
  Int u = 2 * 3 * 5 * 7 * 11 * 13;
  CHECK(find_prime_avoiding(u, Int(10)) == 17);
  // and with nothing to avoid, simply the next prime
  CHECK(find_prime_avoiding(Int(1), Int(100)) == 101);
}

TEST_CASE("set measures") {
  IntSet a({Int(5), Int(-3), Int(0)});
  CHECK(a.card() == 3);
  CHECK(a.min() == -3);
  CHECK(a.max() == 5);
  CHECK(a.diam() == 9);   // 5 - (-3) + 1
  CHECK(a.env() == 6);    // max |.| + 1
  CHECK(a[0] == -3);      // stored sorted
  CHECK(a.contains(Int(0)));
  CHECK_FALSE(a.contains(Int(1)));
  CHECK(a.index_of(Int(5)) == 2);

  CHECK(a.translated(Int(3)) == IntSet({Int(8), Int(0), Int(3)}));
  CHECK(a.scaled(Int(-2)) == IntSet({Int(-10), Int(6), Int(0)}));

  CHECK(IntSet({Int(1), Int(1)}).card() == 1);  // duplicates collapse
  CHECK_THROWS_AS(IntSet(std::vector<Int>{}), input_error);  // empty
}

TEST_CASE("polynomial structure flags") {
  PolySystem ap = ap_system();
  CHECK(ap.arity() == 3);
  CHECK(ap.size() == 1);
  CHECK(ap.is_linear());
  CHECK(ap.is_homogeneous());
  CHECK(ap.norm1_max() == 4);
  CHECK(ap.degree_bound() == 1);
  CHECK(ap[0].coeff_of_var(2) == -2);
  CHECK(ap[0].constant_term() == 0);
  CHECK(ap[0].eval({Int(1), Int(5), Int(3)}) == 0);
  CHECK(ap.all_vanish({Int(0), Int(200), Int(100)}));
  CHECK_FALSE(ap.all_vanish({Int(0), Int(1), Int(2)}));

  PolySystem inh = linear_system({2, -1}, 7);
  CHECK_FALSE(inh.is_homogeneous());
  CHECK(inh.norm1_max() == 10);  // |2| + |-1| + |7|

  PolySystem sq = fct::sum_squares_system();
  CHECK(sq.is_homogeneous());
  CHECK_FALSE(sq.is_linear());
  CHECK(sq.diagonal_degree() == 2);
  CHECK(sq[0].single_var_coeff(3) == -1);
  CHECK(sq[0].single_var_coeff(0) == 1);

  // mixed term breaks diagonality
  Poly mixed(2, {Term{Int(1), {1, 1}}});
  PolySystem pm(2, {mixed});
  CHECK_FALSE(pm.diagonal_degree().has_value());
}

TEST_CASE("solution sets by exhaustive enumeration") {
  PolySystem ap = ap_system();

  // {0,1,3}: only the diagonal solves x1 + x2 = 2 x3
  auto s1 = solution_set(IntSet({Int(0), Int(1), Int(3)}), ap);
  CHECK(s1.size() == 3);

  // {0,100,200}: diagonal plus the two orderings of the progression
  auto s2 = solution_set(IntSet({Int(0), Int(100), Int(200)}), ap);
  CHECK(s2.size() == 5);
  CHECK(s2.contains({0, 2, 1}));
  CHECK(s2.labels(0).size() == 3);

  // budget: the enumeration size is charged before running
  Budget tiny;
  tiny.max_tuples = 10;
  CHECK_THROWS_AS(
      solution_set(IntSet({Int(0), Int(1), Int(2)}), ap, tiny),
      budget_error);
  try {
    solution_set(IntSet({Int(0), Int(1), Int(2)}), ap, tiny);
  } catch (const budget_error& e) {
    CHECK(e.requested() == 27);
    CHECK(e.limit() == 10);
  }
}

TEST_CASE("index tuple odometer") {
  std::vector<std::uint32_t> t(2, 0);
  std::vector<std::vector<std::uint32_t>> seen;
  do {
    seen.push_back(t);
  } while (next_index_tuple(t, 3));
  CHECK(seen.size() == 9);
  CHECK(seen.front() == std::vector<std::uint32_t>{0, 0});
  CHECK(seen[1] == std::vector<std::uint32_t>{0, 1});  // last index fastest
  CHECK(seen.back() == std::vector<std::uint32_t>{2, 2});
}

TEST_CASE("set and system text formats") {
  IntSet a({Int(-17), Int(0), Int(123456789123456789)});
  CHECK(parse_intset(serialize_intset(a)) == a);
  CHECK(parse_intset("# comment\n\n5\n-3\n") == IntSet({Int(5), Int(-3)}));

  PolySystem ap = ap_system();
  CHECK(parse_polysystem(serialize_polysystem(ap)) == ap);
  // the linear shorthand stores the constant as -b
  PolySystem p = parse_polysystem("vars 3\nlinear: 1 1 -2 0\n");
  CHECK(p == ap);
  PolySystem sq =
      parse_polysystem("vars 4\npoly: 1 2 0 0 0 ; 1 0 2 0 0 ; "
                       "-1 0 0 2 0 ; -1 0 0 0 2\n");
  CHECK(sq == fct::sum_squares_system());

  // parse errors carry 1-based line numbers
  try {
    parse_intset("5\nbanana\n");
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_polysystem("linear: 1 1\n"), input_error);
  CHECK_THROWS_AS(parse_polysystem("vars 2\npoly: 1 0\n"), input_error);
}

TEST_CASE("map table formats and algebra") {
  MapTable m = MapTable::single({{Int(0), Int(5)}, {Int(2), Int(-1)}});
  CHECK(m.kind() == MapTable::Kind::single);
  CHECK(m.fold() == 1);
  CHECK(m.apply(Int(2)) == -1);
  CHECK(m.covers(IntSet({Int(0), Int(2)})));
  CHECK_FALSE(m.covers(IntSet({Int(0), Int(1)})));
  CHECK(m.image_set() == IntSet({Int(5), Int(-1)}));
  CHECK(parse_maptable(serialize_maptable(m)) == m);

  MapTable id = MapTable::identity(IntSet({Int(3), Int(7)}));
  CHECK(id.apply(Int(3)) == 3);

  // composition applies the outer table to the inner table's values
  MapTable n = MapTable::single({{Int(5), Int(50)}, {Int(-1), Int(-10)}});
  MapTable c = n.compose_after(m);
  CHECK(c.apply(Int(0)) == 50);
  CHECK(c.apply(Int(2)) == -10);

  // value collisions are rejected: tables are bijections onto their image
  CHECK_THROWS_AS(MapTable::single({{Int(0), Int(1)}, {Int(2), Int(1)}}),
                  input_error);

  // t_fold tables require the full cartesian power as key set
  MapTable tf = MapTable::t_fold(
      2, {{{Int(0), Int(0)}, Int(0)},
          {{Int(0), Int(1)}, Int(1)},
          {{Int(1), Int(0)}, Int(2)},
          {{Int(1), Int(1)}, Int(3)}});
  CHECK(tf.fold() == 2);
  CHECK(tf.base_set() == IntSet({Int(0), Int(1)}));
  CHECK(tf.apply_tuple({Int(1), Int(0)}) == 2);
  CHECK(parse_maptable(serialize_maptable(tf)) == tf);
  CHECK_THROWS_AS(MapTable::t_fold(2, {{{Int(0), Int(0)}, Int(0)},
                                       {{Int(0), Int(1)}, Int(1)}}),
                  input_error);
}

TEST_CASE("solution set and hypergraph formats") {
  PolySystem ap = ap_system();
  auto s = solution_set(IntSet({Int(0), Int(100), Int(200)}), ap);
  CHECK(parse_solutions(serialize_solutions(s)) == s);

  auto g = build_hypergraph(IntSet({Int(0), Int(100), Int(200)}), ap);
  CHECK(g.vertices.card() == 3);
  CHECK(g.edges.size() == 5);
  CHECK(parse_hypergraph(serialize_hypergraph(g)) == g);
}
