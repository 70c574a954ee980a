#include "ineqprice/instance.h"

#include <algorithm>
#include <set>
#include <utility>

#include "ineqprice/errors.h"

namespace ineqprice {

PriceSet::PriceSet(std::vector<Price> prices) : prices_(std::move(prices)) {
  if (prices_.empty()) throw ValidationError("price set is empty");
  for (std::size_t i = 0; i < prices_.size(); ++i) {
    if (prices_[i] <= 0) {
      throw ValidationError("price " + std::to_string(prices_[i]) +
                            " is not positive");
    }
    if (i > 0 && prices_[i] <= prices_[i - 1]) {
      throw ValidationError("prices must be strictly increasing");
    }
  }
}

PriceSet PriceSet::range(Price k) {
  if (k < 1) throw ValidationError("price range needs k >= 1");
  std::vector<Price> p(static_cast<std::size_t>(k));
  for (Price i = 0; i < k; ++i) p[i] = i + 1;
  return PriceSet(std::move(p));
}

bool PriceSet::contains(Price p) const {
  return std::binary_search(prices_.begin(), prices_.end(), p);
}

std::optional<Price> PriceSet::floor(Price v) const {
  auto it = std::upper_bound(prices_.begin(), prices_.end(), v);
  if (it == prices_.begin()) return std::nullopt;
  return *std::prev(it);
}

bool PriceSet::is_initial_range() const {
  return prices_.front() == 1 &&
         prices_.back() == static_cast<Price>(prices_.size());
}

Instance::Instance(PriceSet prices, std::vector<Price> valuations,
                   std::vector<std::int64_t> demands, std::vector<Edge> edges)
    : prices_(std::move(prices)),
      valuations_(std::move(valuations)),
      demands_(std::move(demands)),
      edges_(std::move(edges)) {
  const auto n = static_cast<NodeId>(valuations_.size());
  if (demands_.size() != valuations_.size()) {
    throw ValidationError("demand list length differs from node count");
  }
  for (NodeId v = 0; v < n; ++v) {
    if (valuations_[v] <= 0) {
      throw ValidationError("node " + std::to_string(v) +
                            " has a non-positive valuation");
    }
    if (demands_[v] <= 0) {
      throw ValidationError("node " + std::to_string(v) +
                            " has a non-positive demand");
    }
  }
  adjacency_.assign(valuations_.size(), {});
  std::set<std::pair<NodeId, NodeId>> seen;
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") references an unknown node");
    }
    if (e.u == e.v) {
      throw ValidationError("self loop on node " + std::to_string(e.u));
    }
    if (e.alpha_uv < 0 || e.alpha_vu < 0) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") has a negative alpha");
    }
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      std::swap(e.alpha_uv, e.alpha_vu);
    }
    if (!seen.emplace(e.u, e.v).second) {
      throw ValidationError("duplicate edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
    }
    adjacency_[e.u].push_back({e.v, e.alpha_uv, e.alpha_vu});
    adjacency_[e.v].push_back({e.u, e.alpha_vu, e.alpha_uv});
  }
  for (auto& arcs : adjacency_) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

Instance::Instance(PriceSet prices, std::vector<Price> valuations,
                   std::vector<Edge> edges)
    : Instance(std::move(prices), valuations,
               std::vector<std::int64_t>(valuations.size(), 1),
               std::move(edges)) {}

std::optional<Price> Instance::alpha(NodeId u, NodeId v) const {
  const auto& arcs = adjacency_.at(u);
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), v,
      [](const Arc& a, NodeId target) { return a.to < target; });
  if (it == arcs.end() || it->to != v) return std::nullopt;
  return it->alpha_out;
}

bool Instance::is_normalized() const {
  return std::all_of(valuations_.begin(), valuations_.end(),
                     [&](Price v) { return prices_.contains(v); });
}

bool operator==(const Instance& a, const Instance& b) {
  return a.prices_ == b.prices_ && a.valuations_ == b.valuations_ &&
         a.demands_ == b.demands_ && a.edges_ == b.edges_;
}

PriceVector PriceVector::all_bottom(int num_nodes) {
  return PriceVector{std::vector<PriceChoice>(num_nodes)};
}

PriceVector PriceVector::constant(int num_nodes, Price p) {
  return PriceVector{std::vector<PriceChoice>(num_nodes, p)};
}

void check_price_vector(const Instance& inst, const PriceVector& pv) {
  if (pv.size() != static_cast<std::size_t>(inst.num_nodes())) {
    throw ValidationError("price vector covers " + std::to_string(pv.size()) +
                          " nodes, instance has " +
                          std::to_string(inst.num_nodes()));
  }
  for (std::size_t v = 0; v < pv.size(); ++v) {
    if (pv[v] && !inst.prices().contains(*pv[v])) {
      throw ValidationError("node " + std::to_string(v) + " is assigned " +
                            std::to_string(*pv[v]) +
                            ", which is not in the price set");
    }
  }
}

std::optional<EdgeViolation> first_violation(const Instance& inst,
                                             const PriceVector& pv) {
  check_price_vector(inst, pv);
  for (const Edge& e : inst.edges()) {
    const PriceChoice& pu = pv[e.u];
    const PriceChoice& pw = pv[e.v];
    if (!pu || !pw) continue;
    if (*pu - *pw > e.alpha_uv || *pw - *pu > e.alpha_vu) {
      return EdgeViolation{e.u, e.v, *pu, *pw, e.alpha_uv, e.alpha_vu};
    }
  }
  return std::nullopt;
}

bool is_feasible(const Instance& inst, const PriceVector& pv) {
  return !first_violation(inst, pv).has_value();
}

Revenue revenue(const Instance& inst, const PriceVector& pv) {
  check_price_vector(inst, pv);
  Revenue total = 0;
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    if (pv[v] && *pv[v] <= inst.val(v)) total += inst.demand(v) * *pv[v];
  }
  return total;
}

Revenue max_bound(const Instance& inst) {
  Revenue total = 0;
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    total += inst.demand(v) * inst.val(v);
  }
  return total;
}

Normalization normalize_with_map(const Instance& inst) {
  const PriceSet& prices = inst.prices();
  std::vector<NodeId> new_id(inst.num_nodes(), -1);
  std::vector<NodeId> kept;
  std::vector<NodeId> removed;
  std::vector<Price> vals;
  std::vector<std::int64_t> demands;
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    auto rounded = prices.floor(inst.val(v));
    if (!rounded) {
      removed.push_back(v);
      continue;
    }
    new_id[v] = static_cast<NodeId>(kept.size());
    kept.push_back(v);
    vals.push_back(*rounded);
    demands.push_back(inst.demand(v));
  }
  if (kept.empty() && inst.num_nodes() > 0) {
    throw ValidationError(
        "normalization removed every node: all valuations are below the "
        "cheapest price (empty instance)");
  }
  std::vector<Edge> edges;
  for (const Edge& e : inst.edges()) {
    if (new_id[e.u] < 0 || new_id[e.v] < 0) continue;
    edges.push_back({new_id[e.u], new_id[e.v], e.alpha_uv, e.alpha_vu});
  }
  return Normalization{
      Instance(prices, std::move(vals), std::move(demands), std::move(edges)),
      std::move(kept), std::move(removed)};
}

Instance normalize(const Instance& inst) {
  return normalize_with_map(inst).instance;
}

PriceVector expand_to_original(const Normalization& norm,
                               const PriceVector& pv, int original_nodes) {
  if (pv.size() != norm.kept.size()) {
    throw ValidationError("price vector does not match the normalized instance");
  }
  PriceVector out = PriceVector::all_bottom(original_nodes);
  for (std::size_t i = 0; i < norm.kept.size(); ++i) {
    out[norm.kept[i]] = pv[i];
  }
  return out;
}

}  // namespace ineqprice
