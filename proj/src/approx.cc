#include "ineqprice/approx.h"

#include <algorithm>
#include <set>

#include "ineqprice/bipartite.h"
#include "ineqprice/errors.h"
#include "ineqprice/exact.h"

namespace ineqprice {

Solution alg_two_prices(const Instance& inst) {
  require_normalized(inst, "alg_two_prices");
  const BipartiteRestriction bg = restricted_subgraph(inst);
  const std::vector<NodeId> cover = min_vertex_cover(bg, max_matching(bg));

  PriceVector pv = PriceVector::all_bottom(inst.num_nodes());
  std::vector<bool> in_cover(inst.num_nodes(), false);
  for (NodeId v : cover) in_cover[v] = true;
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    if (!in_cover[v]) pv[v] = inst.val(v);
  }
  const Revenue cover_revenue = revenue(inst, pv);

  Solution single = single_price_best(inst);
  if (single.revenue > cover_revenue) {
    single.tag = "vc";
    return single;
  }
  return Solution{std::move(pv), cover_revenue, "vc"};
}

Instance clamp_to_two_prices(const Instance& inst) {
  const PriceSet& prices = inst.prices();
  if (prices.size() < 2) {
    throw ValidationError("clamping needs at least two prices");
  }
  const Price p2 = prices[1];
  std::vector<Price> vals(inst.valuations().begin(), inst.valuations().end());
  for (Price& v : vals) v = std::min(v, p2);
  return Instance(PriceSet({prices[0], p2}), std::move(vals),
                  {inst.demands().begin(), inst.demands().end()},
                  {inst.edges().begin(), inst.edges().end()});
}

Solution alg_general_k(const Instance& inst) {
  require_normalized(inst, "alg_general_k");
  if (inst.prices().size() < 2) {
    throw ValidationError("alg_general_k needs k >= 2 prices");
  }
  const Solution clamped = alg_two_prices(clamp_to_two_prices(inst));
  // Same edges and a subset of the prices, so the vector is feasible here too.
  const Revenue clamped_revenue = revenue(inst, clamped.prices);
  Solution single = single_price_best(inst);
  if (single.revenue > clamped_revenue) {
    single.tag = "general";
    return single;
  }
  return Solution{clamped.prices, clamped_revenue, "general"};
}

Rational two_price_ratio(Price p1, Price p2, Price alpha_star) {
  if (p1 <= 0 || p2 <= p1) {
    throw ValidationError("two_price_ratio needs 0 < p1 < p2");
  }
  if (alpha_star < 0) throw ValidationError("alpha_star must be nonnegative");
  const Price capped = std::min(alpha_star, p2 - p1 - 1);
  const Price r = std::min(p1, p2 - p1 - capped);
  const BigInt a(p1);
  const BigInt b(p2);
  return Rational(b * b, 2 * b * b - a * b - (b - a) * BigInt(r));
}

Rational guaranteed_ratio(const PriceSet& prices, Price alpha_star) {
  if (prices.size() < 2) {
    throw ValidationError("guaranteed_ratio needs k >= 2 prices");
  }
  const Rational rho2 = two_price_ratio(prices[0], prices[1], alpha_star);
  const Rational x = price_sum_pk(prices, 2) - 1 / rho2;
  return 1 / (price_sum_pk(prices) - x);
}

Rational general_k_ratio(Price max_valuation) {
  const int r = static_cast<int>(std::max<Price>(max_valuation, 2));
  return 1 / (harmonic(r) - Rational(1, 4));
}

Price algorithm_alpha_star(const Instance& inst, const std::string& tag) {
  if (tag == "vc") return restricted_subgraph(inst).alpha_star;
  if (tag == "general") {
    return restricted_subgraph(clamp_to_two_prices(inst)).alpha_star;
  }
  throw ValidationError("no restriction is defined for algorithm '" + tag + "'");
}

Rational RatioReport::achieved() const {
  if (achieved_denominator == 0) return Rational(1);
  return Rational(BigInt(achieved_numerator), BigInt(achieved_denominator));
}

RatioReport ratio_report(const Instance& inst, const Solution& sol,
                         std::optional<Revenue> opt) {
  RatioReport report;
  if (sol.tag == "single-price") {
    const Rational pk = price_sum_pk(inst.prices());
    const Rational bound =
        inst.num_nodes() == 0 ? pk : std::min(harmonic(inst.num_nodes()), pk);
    report.guaranteed = 1 / bound;
  } else if (sol.tag == "vc" || sol.tag == "general") {
    report.guaranteed =
        guaranteed_ratio(inst.prices(), algorithm_alpha_star(inst, sol.tag));
  } else if (sol.tag == "brute") {
    report.guaranteed = 1;
  } else {
    throw ValidationError("unknown algorithm tag '" + sol.tag + "'");
  }
  report.achieved_numerator = sol.revenue;
  report.achieved_denominator = opt ? *opt : max_bound(inst);
  return report;
}

}  // namespace ineqprice
