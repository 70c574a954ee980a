#ifndef INEQPRICE_GENERATORS_H_
#define INEQPRICE_GENERATORS_H_

#include <cstdint>
#include <random>

#include "ineqprice/instance.h"
#include "ineqprice/rational.h"

namespace ineqprice {

// `copies` disjoint copies of the four-node gadget a(2) b(2) c(1) d(1) with
// edges b-c and b-d at zero slack, P = {1, 2}. Copy i occupies ids 4i..4i+3.
// With `chain`, the first node of consecutive copies is joined by an edge of
// slack 1 both ways, which makes the graph connected without binding anything.
Instance gen_fig1(int copies, bool chain = false);

// Clique on n nodes (2 <= n <= 8), node i-1 valued n!/i, every slack n!,
// prices are the distinct valuations.
Instance gen_clique_harmonic(int n);

// Clique on k! nodes (2 <= k <= 6) over prices {1..k}: k!/(i(i+1)) nodes of
// value i for i < k, (k-1)! nodes of value k, every slack k. Nodes are
// grouped by ascending value.
Instance gen_clique_pk(int k);

// Appends a node valued 1 joined to every existing node with zero slack both
// ways; 1 joins the price set if missing.
Instance gen_nd_pinch(const Instance& inst);

struct RandomSpec {
  int n = 1;
  PriceSet prices = PriceSet::range(2);
  Rational edge_prob = Rational(1, 2);
  Price alpha_max = 0;
  std::int64_t max_demand = 1;
  std::uint64_t seed = 0;
};

// Bounded uniform draw on std::mt19937_64, whose output sequence is fixed by
// the C++ standard: rejection sampling below 2^64 - (2^64 mod bound), then
// reduction mod bound.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Seeded random instance. Draw order, all from one std::mt19937_64(seed):
//   for each node v = 0..n-1: valuation index uniform_below(k); then, only if
//     max_demand > 1, demand 1 + uniform_below(max_demand);
//   for each pair u < v: edge iff uniform_below(den) < num for edge_prob =
//     num/den; if present alpha_uv then alpha_vu, each
//     uniform_below(alpha_max + 1).
// The same spec yields the same instance on every platform.
Instance gen_random(const RandomSpec& spec);

}  // namespace ineqprice

#endif  // INEQPRICE_GENERATORS_H_
