#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freicond/errors.hpp"
#include "freicond/freiman.hpp"
#include "freicond/hypergraph_iso.hpp"
#include "freicond/solutions.hpp"
#include "helpers.hpp"

using namespace freicond;
using fct::ap_system;

TEST_CASE("identity and dilation are isomorphisms") {
  PolySystem ap = ap_system();
  IntSet a({Int(0), Int(100), Int(200)});

  CHECK(is_freiman_iso(MapTable::identity(a), a, ap).yes);

  // dilation preserves solutions of a homogeneous system exactly
  MapTable dil = MapTable::single(
      {{Int(0), Int(0)}, {Int(100), Int(300)}, {Int(200), Int(600)}});
  CHECK(is_freiman_iso(dil, a, ap).yes);

  // translation preserves them when the coefficients sum to zero
  MapTable tr = MapTable::single(
      {{Int(0), Int(-7)}, {Int(100), Int(93)}, {Int(200), Int(193)}});
  CHECK(is_freiman_iso(tr, a, ap).yes);
}

TEST_CASE("counterexamples are lexicographically first") {
  PolySystem ap = ap_system();
  IntSet a({Int(0), Int(100), Int(200)});

  // collapsing the progression onto {0,1,3} loses (0,200,100)
  MapTable bad = MapTable::single(
      {{Int(0), Int(0)}, {Int(100), Int(1)}, {Int(200), Int(3)}});
  auto v = is_freiman_iso(bad, a, ap);
  REQUIRE_FALSE(v.yes);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->direction == Direction::lost_solution);
  CHECK(v.witness->tuple == std::vector<Int>{Int(0), Int(200), Int(100)});

  // the reverse map invents that solution: spurious direction
  IntSet b({Int(0), Int(1), Int(3)});
  MapTable inv = MapTable::single(
      {{Int(0), Int(0)}, {Int(1), Int(100)}, {Int(3), Int(200)}});
  auto w = is_freiman_iso(inv, b, ap);
  REQUIRE_FALSE(w.yes);
  CHECK(w.witness->direction == Direction::spurious_solution);
  CHECK(w.witness->tuple == std::vector<Int>{Int(0), Int(3), Int(1)});
}

TEST_CASE("verdicts agree with the double-enumeration oracle") {
  fct::Rng rng(20260817);
  int yes_seen = 0, no_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::uint32_t s = 2 + trial % 3;
    auto a = rng.random_set(2 + trial % 3, -20, 20);
    auto p = rng.random_linear_system(s, 2, trial % 2 == 0);
    MapTable psi = trial % 5 == 0 ? MapTable::identity(a)
                                  : rng.random_map(a, -25, 25);
    bool expect = fct::iso_oracle(psi, a, p);
    auto v = is_freiman_iso(psi, a, p);
    CHECK(v.yes == expect);
    (expect ? yes_seen : no_seen)++;
    if (!v.yes) {
      // the witness must actually violate preservation
      REQUIRE(v.witness.has_value());
      std::vector<Int> img;
      for (const auto& x : v.witness->tuple) img.push_back(psi.apply(x));
      bool pre = p.all_vanish(v.witness->tuple);
      bool post = p.all_vanish(img);
      CHECK(pre != post);
      CHECK((v.witness->direction == Direction::lost_solution) == pre);
    }
  }
  // the mix must exercise both verdicts to mean anything
  CHECK(yes_seen >= 20);
  CHECK(no_seen >= 20);
}

TEST_CASE("maps must cover the set injectively") {
  PolySystem ap = ap_system();
  IntSet a({Int(0), Int(1), Int(2)});
  MapTable partial = MapTable::single({{Int(0), Int(0)}, {Int(1), Int(1)}});
  CHECK_THROWS_AS(is_freiman_iso(partial, a, ap), input_error);
}

TEST_CASE("t_fold verification") {
  PolySystem ap = ap_system();
  IntSet d({Int(0), Int(1)});

  // omega(d1,d2) = 3 d1 + d2 is a 2-fold isomorphism for the progression
  // system on {0,1}: it is injective and, both sets being progression-free
  // off the diagonal, preservation reduces to the diagonal grid.
  MapTable omega = MapTable::t_fold(2, {{{Int(0), Int(0)}, Int(0)},
                                        {{Int(0), Int(1)}, Int(1)},
                                        {{Int(1), Int(0)}, Int(3)},
                                        {{Int(1), Int(1)}, Int(4)}});
  CHECK(is_tfold_freiman_iso(omega, d, ap).yes);

  // omega'(d1,d2) = 2 d1 + d2 maps onto {0,1,2,3}, which contains the
  // progression (0,2,1): a spurious solution the grid does not have.
  MapTable bad = MapTable::t_fold(2, {{{Int(0), Int(0)}, Int(0)},
                                      {{Int(0), Int(1)}, Int(1)},
                                      {{Int(1), Int(0)}, Int(2)},
                                      {{Int(1), Int(1)}, Int(3)}});
  auto v = is_tfold_freiman_iso(bad, d, ap);
  REQUIRE_FALSE(v.yes);
  CHECK(v.witness->direction == Direction::spurious_solution);
  // the flattened witness lists t s-tuples over the base set
  CHECK(v.witness->tuple.size() == 6);

  // base set mismatch is an input error
  CHECK_THROWS_AS(
      is_tfold_freiman_iso(omega, IntSet({Int(0), Int(2)}), ap),
      input_error);
}

TEST_CASE("verification budgets charge before enumerating") {
  PolySystem ap = ap_system();
  IntSet a({Int(0), Int(1), Int(2), Int(4), Int(8)});
  Budget tiny;
  tiny.max_tuples = 100;  // 5^3 = 125 exceeds it
  CHECK_THROWS_AS(is_freiman_iso(MapTable::identity(a), a, ap, tiny),
                  budget_error);
}

TEST_CASE("hypergraph isomorphism on progression structures") {
  PolySystem ap = ap_system();
  auto g1 = build_hypergraph(IntSet({Int(0), Int(1), Int(2)}), ap);
  auto g2 = build_hypergraph(IntSet({Int(0), Int(2), Int(4)}), ap);
  auto g3 = build_hypergraph(IntSet({Int(0), Int(1), Int(4)}), ap);

  // {0,1,2} is a progression, {0,2,4} its dilate: isomorphic (5 edges each)
  CHECK(g1.edges.size() == 5);
  CHECK(g3.edges.size() == 3);  // progression-free: diagonal only
  auto iso = hypergraph_isomorphic(g1, g2);
  REQUIRE(iso.has_value());
  CHECK(hypergraph_iso_valid(g1, g2, *iso));

  // a progression is never isomorphic to a progression-free set
  CHECK_FALSE(hypergraph_isomorphic(g1, g3).has_value());

  // the vertex cap is a hard search limit
  std::vector<Int> big;
  for (int i = 0; i < 9; ++i) big.emplace_back(i * i * i);
  auto gb = build_hypergraph(IntSet(big), ap);
  CHECK_THROWS_AS(hypergraph_isomorphic(gb, gb), budget_error);
}
