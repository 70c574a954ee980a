#ifndef INEQPRICE_INSTANCE_H_
#define INEQPRICE_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ineqprice {

using NodeId = std::int32_t;
using Price = std::int64_t;
using Revenue = std::int64_t;

// Strictly increasing, nonempty set of positive integer prices p1 < ... < pk.
class PriceSet {
 public:
  explicit PriceSet(std::vector<Price> prices);

  // {1, 2, ..., k}
  static PriceSet range(Price k);

  std::span<const Price> values() const { return prices_; }
  std::size_t size() const { return prices_.size(); }
  Price operator[](std::size_t i) const { return prices_[i]; }
  Price min() const { return prices_.front(); }
  Price max() const { return prices_.back(); }

  bool contains(Price p) const;
  // Largest price not exceeding v, if any.
  std::optional<Price> floor(Price v) const;
  // True iff the set is exactly {1, ..., k}.
  bool is_initial_range() const;

  friend bool operator==(const PriceSet&, const PriceSet&) = default;

 private:
  std::vector<Price> prices_;
};

// Undirected edge {u, v} with a slack per orientation:
// p_u - p_v <= alpha_uv and p_v - p_u <= alpha_vu.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Price alpha_uv = 0;
  Price alpha_vu = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Adjacency entry seen from one endpoint. alpha_out = alpha(self, to),
// alpha_in = alpha(to, self).
struct Arc {
  NodeId to = 0;
  Price alpha_out = 0;
  Price alpha_in = 0;
};

// A pricing instance: simple undirected graph, per-orientation slacks, a price
// set and a single-value revenue function (valuation and demand) per node.
// Immutable after construction; the constructor validates everything.
class Instance {
 public:
  Instance(PriceSet prices, std::vector<Price> valuations,
           std::vector<std::int64_t> demands, std::vector<Edge> edges);
  // Unit demand everywhere.
  Instance(PriceSet prices, std::vector<Price> valuations,
           std::vector<Edge> edges);

  int num_nodes() const { return static_cast<int>(valuations_.size()); }
  std::size_t num_edges() const { return edges_.size(); }
  const PriceSet& prices() const { return prices_; }

  Price val(NodeId v) const { return valuations_[v]; }
  std::int64_t demand(NodeId v) const { return demands_[v]; }
  std::span<const Price> valuations() const { return valuations_; }
  std::span<const std::int64_t> demands() const { return demands_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Arc> neighbors(NodeId v) const { return adjacency_[v]; }

  // alpha(u, v) when {u, v} is an edge.
  std::optional<Price> alpha(NodeId u, NodeId v) const;

  // Every valuation is a member of the price set.
  bool is_normalized() const;

  // Structural equality; edges compare in stored order.
  friend bool operator==(const Instance& a, const Instance& b);

 private:
  PriceSet prices_;
  std::vector<Price> valuations_;
  std::vector<std::int64_t> demands_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adjacency_;
};

// A price in the price set, or nullopt for the discontinuity (no offer).
using PriceChoice = std::optional<Price>;

struct PriceVector {
  std::vector<PriceChoice> assignment;

  static PriceVector all_bottom(int num_nodes);
  static PriceVector constant(int num_nodes, Price p);

  std::size_t size() const { return assignment.size(); }
  const PriceChoice& operator[](std::size_t v) const { return assignment[v]; }
  PriceChoice& operator[](std::size_t v) { return assignment[v]; }

  friend bool operator==(const PriceVector&, const PriceVector&) = default;
};

struct Solution {
  PriceVector prices;
  Revenue revenue = 0;
  std::string tag;
};

// Throws ValidationError unless pv covers exactly the instance's nodes and
// every assigned price belongs to the price set.
void check_price_vector(const Instance& inst, const PriceVector& pv);

struct EdgeViolation {
  NodeId u = 0;
  NodeId v = 0;
  Price price_u = 0;
  Price price_v = 0;
  Price alpha_uv = 0;
  Price alpha_vu = 0;
};

// First edge (in stored order) whose constraint pv breaks. Edges touching a
// discontinuity never count.
std::optional<EdgeViolation> first_violation(const Instance& inst,
                                             const PriceVector& pv);

bool is_feasible(const Instance& inst, const PriceVector& pv);

// Sum over nodes of demand * price for every offered price not above the
// valuation. Does not check the edge constraints.
Revenue revenue(const Instance& inst, const PriceVector& pv);

// MAX: sum of demand * valuation.
Revenue max_bound(const Instance& inst);

struct Normalization {
  Instance instance;
  // original id of each surviving node, indexed by new id
  std::vector<NodeId> kept;
  std::vector<NodeId> removed;
};

// Rounds every valuation down to the largest price not above it and drops
// nodes valued below the cheapest price (with their edges). Survivors are
// renumbered in original order. Throws ValidationError if nothing survives.
Normalization normalize_with_map(const Instance& inst);
Instance normalize(const Instance& inst);

// Maps a price vector on the normalized instance back onto the original node
// ids; removed nodes receive a discontinuity.
PriceVector expand_to_original(const Normalization& norm,
                               const PriceVector& pv, int original_nodes);

}  // namespace ineqprice

#endif  // INEQPRICE_INSTANCE_H_
