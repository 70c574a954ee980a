#include <doctest.h>

#include "helpers.h"
#include "ineqprice/errors.h"
#include "ineqprice/exact.h"
#include "ineqprice/generators.h"
#include "ineqprice/instance.h"

using namespace ineqprice;
using ineqprice::testing::fig1;
using ineqprice::testing::random_spec;
using ineqprice::testing::vec;

TEST_CASE("price sets are validated") {
  CHECK_THROWS_AS(PriceSet({}), ValidationError);
  CHECK_THROWS_AS(PriceSet({0, 1}), ValidationError);
  CHECK_THROWS_AS(PriceSet({2, 2}), ValidationError);
  CHECK_THROWS_AS(PriceSet({3, 1}), ValidationError);
  const PriceSet p({10, 20, 25});
  CHECK(p.floor(15) == 10);
  CHECK(p.floor(99) == 25);
  CHECK_FALSE(p.floor(9));
  CHECK(PriceSet::range(4).is_initial_range());
  CHECK_FALSE(p.is_initial_range());
}

TEST_CASE("instance construction rejects malformed graphs") {
  const PriceSet p = PriceSet::range(2);
  CHECK_THROWS_AS(Instance(p, {1, 0}, {}), ValidationError);
  CHECK_THROWS_AS(Instance(p, {1, 1}, {{0, 2, 0, 0}}), ValidationError);
  CHECK_THROWS_AS(Instance(p, {1, 1}, {{1, 1, 0, 0}}), ValidationError);
  CHECK_THROWS_AS(Instance(p, {1, 1}, {{0, 1, -1, 0}}), ValidationError);
  CHECK_THROWS_AS(Instance(p, {1, 1}, {{0, 1, 0, 0}, {1, 0, 0, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(Instance(p, {1, 1}, {0, 1}, {}), ValidationError);
}

TEST_CASE("edges are stored with u < v and slacks follow the orientation") {
  const Instance inst(PriceSet::range(3), {1, 3}, {{1, 0, 2, 0}});
  CHECK(inst.edges()[0].u == 0);
  CHECK(inst.edges()[0].alpha_uv == 0);
  CHECK(inst.edges()[0].alpha_vu == 2);
  CHECK(inst.alpha(1, 0) == 2);
  CHECK(inst.alpha(0, 1) == 0);
  CHECK_FALSE(inst.alpha(0, 0));
}

TEST_CASE("feasibility") {
  SUBCASE("single node accepts every price") {
    const Instance one(PriceSet::range(3), {2}, {});
    for (Price p = 1; p <= 3; ++p) CHECK(is_feasible(one, vec({p})));
  }
  const Instance inst = fig1();
  CHECK(is_feasible(inst, vec({2, std::nullopt, 1, 1})));
  CHECK_FALSE(is_feasible(inst, vec({2, 2, 1, 1})));
  const auto bad = first_violation(inst, vec({2, 2, 1, 1}));
  REQUIRE(bad);
  CHECK(bad->u == 1);
  CHECK(bad->v == 2);
  CHECK_THROWS_AS(is_feasible(inst, vec({3, 1, 1, 1})), ValidationError);
  CHECK_THROWS_AS(is_feasible(inst, vec({1, 1, 1})), ValidationError);
}

TEST_CASE("directed slack is honoured per orientation") {
  const Instance inst(PriceSet::range(3), {3, 3}, {{0, 1, 2, 0}});
  CHECK(is_feasible(inst, vec({3, 1})));
  CHECK_FALSE(is_feasible(inst, vec({1, 3})));
}

TEST_CASE("revenue") {
  const Instance inst = fig1();
  CHECK(revenue(inst, PriceVector::all_bottom(4)) == 0);
  CHECK(revenue(inst, vec({2, std::nullopt, 1, 1})) == 4);
  CHECK(revenue(inst, vec({2, 2, 2, 2})) == 4);
  const Instance heavy(PriceSet::range(2), {2}, {3}, {});
  CHECK(revenue(heavy, vec({2})) == 6);
}

TEST_CASE("max bound") {
  CHECK(max_bound(fig1()) == 6);
  CHECK(max_bound(Instance(PriceSet::range(1), {}, {})) == 0);
  CHECK(max_bound(gen_clique_harmonic(3)) == 11);
}

TEST_CASE("normalization") {
  SUBCASE("values above the top price are capped") {
    const Instance inst(PriceSet::range(3), {7}, {});
    CHECK(normalize(inst).val(0) == 3);
  }
  SUBCASE("values between prices round down") {
    const Instance inst(PriceSet({10, 20}), {15}, {});
    CHECK(normalize(inst).val(0) == 10);
  }
  SUBCASE("values below the cheapest price are removed with their edges") {
    const Instance inst(PriceSet({10, 20}), {4, 20, 10},
                        {{0, 1, 0, 0}, {1, 2, 3, 4}});
    const Normalization norm = normalize_with_map(inst);
    CHECK(norm.instance.num_nodes() == 2);
    CHECK(norm.kept == std::vector<NodeId>{1, 2});
    CHECK(norm.removed == std::vector<NodeId>{0});
    REQUIRE(norm.instance.num_edges() == 1);
    CHECK(norm.instance.edges()[0] == Edge{0, 1, 3, 4});
    const PriceVector back =
        expand_to_original(norm, vec({20, 10}), inst.num_nodes());
    CHECK(back == vec({std::nullopt, 20, 10}));
  }
  SUBCASE("removing every node is an error") {
    const Instance inst(PriceSet({10, 20}), {4, 5}, {});
    CHECK_THROWS_AS(normalize(inst), ValidationError);
  }
}

TEST_CASE("property: revenue bounds, constant vectors, bottom subsets") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = normalize(gen_random(
        random_spec(1 + static_cast<int>(seed % 7), PriceSet({1, 2, 4, 5}),
                    static_cast<Price>(seed % 3), seed)));
    const int n = inst.num_nodes();
    for (Price p : inst.prices().values()) {
      const PriceVector constant = PriceVector::constant(n, p);
      REQUIRE(is_feasible(inst, constant));
      const Revenue r = revenue(inst, constant);
      CHECK(r >= 0);
      CHECK(r <= max_bound(inst));
      PriceVector thinned = constant;
      for (int v = 0; v < n; v += 2) thinned[v] = std::nullopt;
      CHECK(is_feasible(inst, thinned));
      CHECK(revenue(inst, thinned) <= r);
    }
    const Solution best = brute_force_opt(inst);
    CHECK(is_feasible(inst, best.prices));
    CHECK(best.revenue <= max_bound(inst));
  }
}

TEST_CASE("property: normalization is idempotent") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance raw = gen_random(
        random_spec(8, PriceSet({1, 2, 3, 5, 8, 13}), 4, seed));
    const Instance shrunk(PriceSet({2, 5, 9}),
                          {raw.valuations().begin(), raw.valuations().end()},
                          {raw.edges().begin(), raw.edges().end()});
    try {
      const Instance once = normalize(shrunk);
      CHECK(once.is_normalized());
      CHECK(normalize(once) == once);
    } catch (const ValidationError&) {
      // every node valued 1: nothing survives
    }
  }
}

TEST_CASE("property: raising a bottom node to a feasible price never loses revenue") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = normalize(gen_random(random_spec(6, PriceSet::range(3), 1, seed)));
    PriceVector pv = PriceVector::all_bottom(inst.num_nodes());
    for (NodeId v = 0; v < inst.num_nodes(); ++v) {
      const Revenue before = revenue(inst, pv);
      pv[v] = inst.val(v);
      if (!is_feasible(inst, pv)) {
        pv[v] = std::nullopt;
        continue;
      }
      CHECK(revenue(inst, pv) >= before);
    }
  }
}
