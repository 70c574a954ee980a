#include "ineqprice/generators.h"

#include <limits>
#include <vector>

#include "ineqprice/errors.h"

namespace ineqprice {

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Edge> clique_edges(int n, Price alpha) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, alpha, alpha});
  }
  return edges;
}

}  // namespace

Instance gen_fig1(int copies, bool chain) {
  if (copies < 1) throw ValidationError("fig1 needs at least one copy");
  std::vector<Price> vals;
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c) {
    const NodeId base = 4 * c;
    vals.insert(vals.end(), {2, 2, 1, 1});
    edges.push_back({base + 1, base + 2, 0, 0});
    edges.push_back({base + 1, base + 3, 0, 0});
    if (chain && c > 0) edges.push_back({base - 4, base, 1, 1});
  }
  return Instance(PriceSet({1, 2}), std::move(vals), std::move(edges));
}

Instance gen_clique_harmonic(int n) {
  if (n < 2 || n > 8) {
    throw ValidationError("clique_harmonic needs 2 <= n <= 8, got " +
                          std::to_string(n));
  }
  const std::int64_t f = factorial(n);
  std::vector<Price> vals;
  std::vector<Price> prices;
  for (int i = 1; i <= n; ++i) vals.push_back(f / i);
  for (int i = n; i >= 1; --i) prices.push_back(f / i);
  return Instance(PriceSet(std::move(prices)), std::move(vals),
                  clique_edges(n, f));
}

Instance gen_clique_pk(int k) {
  if (k < 2 || k > 6) {
    throw ValidationError("clique_pk needs 2 <= k <= 6, got " + std::to_string(k));
  }
  const std::int64_t n = factorial(k);
  std::vector<Price> vals;
  for (int i = 1; i < k; ++i) {
    vals.insert(vals.end(), n / (i * (i + 1)), i);
  }
  vals.insert(vals.end(), n / k, k);
  if (static_cast<std::int64_t>(vals.size()) != n) {
    throw std::logic_error("clique_pk group sizes do not sum to k!");
  }
  return Instance(PriceSet::range(k), std::move(vals),
                  clique_edges(static_cast<int>(n), k));
}

Instance gen_nd_pinch(const Instance& inst) {
  std::vector<Price> prices(inst.prices().values().begin(),
                            inst.prices().values().end());
  if (prices.front() != 1) prices.insert(prices.begin(), 1);
  std::vector<Price> vals(inst.valuations().begin(), inst.valuations().end());
  std::vector<std::int64_t> demands(inst.demands().begin(),
                                    inst.demands().end());
  std::vector<Edge> edges(inst.edges().begin(), inst.edges().end());
  const NodeId pinch = inst.num_nodes();
  vals.push_back(1);
  demands.push_back(1);
  for (NodeId v = 0; v < pinch; ++v) edges.push_back({v, pinch, 0, 0});
  return Instance(PriceSet(std::move(prices)), std::move(vals),
                  std::move(demands), std::move(edges));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ValidationError("uniform_below needs a positive bound");
  // 2^64 mod bound, computed without overflow.
  const std::uint64_t skip = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= skip) return x % bound;
  }
}

Instance gen_random(const RandomSpec& spec) {
  if (spec.n < 1) throw ValidationError("random instance needs n >= 1");
  if (spec.edge_prob < 0 || spec.edge_prob > 1) {
    throw ValidationError("edge probability must lie in [0, 1]");
  }
  if (spec.alpha_max < 0) throw ValidationError("alpha_max must be nonnegative");
  if (spec.max_demand < 1) throw ValidationError("max_demand must be positive");
  const BigInt num_big = boost::multiprecision::numerator(spec.edge_prob);
  const BigInt den_big = boost::multiprecision::denominator(spec.edge_prob);
  if (den_big > std::numeric_limits<std::uint64_t>::max()) {
    throw ValidationError("edge probability denominator too large");
  }
  const auto num = num_big.convert_to<std::uint64_t>();
  const auto den = den_big.convert_to<std::uint64_t>();

  std::mt19937_64 rng(spec.seed);
  const auto k = static_cast<std::uint64_t>(spec.prices.size());
  std::vector<Price> vals(spec.n);
  std::vector<std::int64_t> demands(spec.n, 1);
  for (int v = 0; v < spec.n; ++v) {
    vals[v] = spec.prices[uniform_below(rng, k)];
    if (spec.max_demand > 1) {
      demands[v] = 1 + static_cast<std::int64_t>(uniform_below(
                           rng, static_cast<std::uint64_t>(spec.max_demand)));
    }
  }
  std::vector<Edge> edges;
  const auto slack_bound = static_cast<std::uint64_t>(spec.alpha_max) + 1;
  for (NodeId u = 0; u < spec.n; ++u) {
    for (NodeId v = u + 1; v < spec.n; ++v) {
      if (uniform_below(rng, den) >= num) continue;
      const auto a_uv = static_cast<Price>(uniform_below(rng, slack_bound));
      const auto a_vu = static_cast<Price>(uniform_below(rng, slack_bound));
      edges.push_back({u, v, a_uv, a_vu});
    }
  }
  return Instance(spec.prices, std::move(vals), std::move(demands),
                  std::move(edges));
}

}  // namespace ineqprice
