#include <algorithm>

#include "ineqprice/errors.h"
#include "ineqprice/reductions.h"

namespace ineqprice {

ReductionOutput multi_demand_reduce(const Instance& inst,
                                    std::int64_t size_cap) {
  std::int64_t total = 0;
  std::int64_t largest = 0;
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    total += inst.demand(v);
    largest = std::max(largest, inst.demand(v));
    if (total > size_cap) {
      throw SizeLimitError("expanded instance exceeds the cap of " +
                           std::to_string(size_cap) + " nodes");
    }
  }

  std::vector<std::vector<NodeId>> bundles(inst.num_nodes());
  std::vector<Price> vals;
  std::vector<Edge> edges;
  vals.reserve(static_cast<std::size_t>(total));
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    for (std::int64_t c = 0; c < inst.demand(v); ++c) {
      const auto id = static_cast<NodeId>(vals.size());
      for (NodeId other : bundles[v]) edges.push_back({other, id, 0, 0});
      bundles[v].push_back(id);
      vals.push_back(inst.val(v));
    }
  }
  for (const Edge& e : inst.edges()) {
    for (NodeId a : bundles[e.u]) {
      for (NodeId b : bundles[e.v]) edges.push_back({a, b, e.alpha_uv, e.alpha_vu});
    }
  }

  ReductionOutput out{
      Instance(inst.prices(), std::move(vals), std::move(edges)),
      std::nullopt, std::move(bundles), {}, {}};
  out.params["total_nodes"] = Rational(total);
  out.params["max_demand"] = Rational(largest);
  return out;
}

PriceVector lift_solution(const Instance& original,
                          const ReductionOutput& reduced,
                          const PriceVector& pv) {
  if (reduced.bundle_map.size() != static_cast<std::size_t>(original.num_nodes())) {
    throw ValidationError("reduction does not match the original instance");
  }
  if (!is_feasible(reduced.instance, pv)) {
    throw ValidationError("price vector is infeasible for the reduced instance");
  }
  PriceVector lifted = PriceVector::all_bottom(original.num_nodes());
  for (NodeId u = 0; u < original.num_nodes(); ++u) {
    for (NodeId copy : reduced.bundle_map[u]) {
      if (pv[copy] && (!lifted[u] || *pv[copy] > *lifted[u])) lifted[u] = pv[copy];
    }
  }
  return lifted;
}

}  // namespace ineqprice
