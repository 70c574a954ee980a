#ifndef INEQPRICE_TESTS_HELPERS_H_
#define INEQPRICE_TESTS_HELPERS_H_

#include <optional>
#include <vector>

#include "ineqprice/generators.h"
#include "ineqprice/instance.h"

namespace ineqprice::testing {

inline Instance fig1() { return gen_fig1(1); }

inline PriceVector vec(std::initializer_list<std::optional<Price>> items) {
  return PriceVector{std::vector<PriceChoice>(items)};
}

inline RandomSpec random_spec(int n, PriceSet prices, Price alpha_max,
                              std::uint64_t seed,
                              Rational edge_prob = Rational(1, 2),
                              std::int64_t max_demand = 1) {
  RandomSpec spec;
  spec.n = n;
  spec.prices = std::move(prices);
  spec.edge_prob = edge_prob;
  spec.alpha_max = alpha_max;
  spec.max_demand = max_demand;
  spec.seed = seed;
  return spec;
}

}  // namespace ineqprice::testing

#endif  // INEQPRICE_TESTS_HELPERS_H_
