#include "ineqprice/bipartite.h"

#include <algorithm>
#include <map>
#include <set>

#include "ineqprice/errors.h"

namespace ineqprice {

BipartiteRestriction restricted_subgraph(const Instance& inst) {
  const PriceSet& prices = inst.prices();
  if (prices.size() != 2) {
    throw ValidationError("restricted subgraph needs exactly two prices, got " +
                          std::to_string(prices.size()));
  }
  const Price low = prices[0];
  const Price high = prices[1];
  BipartiteRestriction bg;
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    if (inst.val(v) == high) {
      bg.left.push_back(v);
    } else if (inst.val(v) == low) {
      bg.right.push_back(v);
    } else {
      throw ValidationError("node " + std::to_string(v) + " has valuation " +
                            std::to_string(inst.val(v)) +
                            " outside the price set");
    }
  }
  for (NodeId u : bg.left) {
    for (const Arc& a : inst.neighbors(u)) {
      if (inst.val(a.to) != low || a.alpha_out >= high - low) continue;
      bg.edges.emplace_back(u, a.to);
      bg.alpha_star = std::max(bg.alpha_star, a.alpha_in);
    }
  }
  std::sort(bg.edges.begin(), bg.edges.end());
  return bg;
}

namespace {

// Dense local indexing of one side of the restriction.
class Sides {
 public:
  explicit Sides(const BipartiteRestriction& bg) {
    for (std::size_t i = 0; i < bg.left.size(); ++i) left_index_[bg.left[i]] = i;
    for (std::size_t i = 0; i < bg.right.size(); ++i) {
      right_index_[bg.right[i]] = i;
    }
    adj_.assign(bg.left.size(), {});
    for (const auto& [u, v] : bg.edges) {
      adj_[left(u)].push_back(right(v));
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  std::size_t left(NodeId u) const {
    auto it = left_index_.find(u);
    if (it == left_index_.end()) {
      throw ValidationError("node " + std::to_string(u) + " is not on the left side");
    }
    return it->second;
  }
  std::size_t right(NodeId v) const {
    auto it = right_index_.find(v);
    if (it == right_index_.end()) {
      throw ValidationError("node " + std::to_string(v) +
                            " is not on the right side");
    }
    return it->second;
  }
  const std::vector<std::vector<std::size_t>>& adj() const { return adj_; }

 private:
  std::map<NodeId, std::size_t> left_index_;
  std::map<NodeId, std::size_t> right_index_;
  std::vector<std::vector<std::size_t>> adj_;
};

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<bool>& visited, std::vector<std::size_t>& match_left,
             std::vector<std::size_t>& match_right) {
  for (std::size_t v : adj[u]) {
    if (visited[v]) continue;
    visited[v] = true;
    if (match_right[v] == kFree ||
        augment(match_right[v], adj, visited, match_left, match_right)) {
      match_left[u] = v;
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching max_matching(const BipartiteRestriction& bg) {
  const Sides sides(bg);
  std::vector<std::size_t> match_left(bg.left.size(), kFree);
  std::vector<std::size_t> match_right(bg.right.size(), kFree);
  for (std::size_t u = 0; u < bg.left.size(); ++u) {
    std::vector<bool> visited(bg.right.size(), false);
    augment(u, sides.adj(), visited, match_left, match_right);
  }
  Matching m;
  for (std::size_t u = 0; u < bg.left.size(); ++u) {
    if (match_left[u] != kFree) {
      m.pairs.emplace_back(bg.left[u], bg.right[match_left[u]]);
    }
  }
  return m;
}

std::vector<NodeId> min_vertex_cover(const BipartiteRestriction& bg,
                                     const Matching& m) {
  const Sides sides(bg);
  const std::set<std::pair<NodeId, NodeId>> edge_set(bg.edges.begin(),
                                                     bg.edges.end());
  std::vector<std::size_t> match_left(bg.left.size(), kFree);
  std::vector<std::size_t> match_right(bg.right.size(), kFree);
  for (const auto& [u, v] : m.pairs) {
    if (!edge_set.contains({u, v})) {
      throw ValidationError("matching uses a pair that is not a restricted edge");
    }
    const std::size_t lu = sides.left(u);
    const std::size_t rv = sides.right(v);
    if (match_left[lu] != kFree || match_right[rv] != kFree) {
      throw ValidationError("matching reuses a vertex");
    }
    match_left[lu] = rv;
    match_right[rv] = lu;
  }

  // Alternating search: left -> right on any edge, right -> left on the
  // matched edge only.
  std::vector<bool> left_reached(bg.left.size(), false);
  std::vector<bool> right_reached(bg.right.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < bg.left.size(); ++u) {
    if (match_left[u] == kFree) {
      left_reached[u] = true;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : sides.adj()[u]) {
      if (right_reached[v]) continue;
      right_reached[v] = true;
      if (match_right[v] == kFree) {
        throw ValidationError(
            "matching is not maximum: an augmenting path exists");
      }
      const std::size_t w = match_right[v];
      if (!left_reached[w]) {
        left_reached[w] = true;
        stack.push_back(w);
      }
    }
  }

  std::vector<NodeId> cover;
  for (std::size_t u = 0; u < bg.left.size(); ++u) {
    if (!left_reached[u]) cover.push_back(bg.left[u]);
  }
  for (std::size_t v = 0; v < bg.right.size(); ++v) {
    if (right_reached[v]) cover.push_back(bg.right[v]);
  }
  std::sort(cover.begin(), cover.end());
  if (cover.size() != m.size()) {
    throw ValidationError("vertex cover size differs from the matching size");
  }
  return cover;
}

bool covers_all_edges(const BipartiteRestriction& bg,
                      const std::vector<NodeId>& cover) {
  const std::set<NodeId> in_cover(cover.begin(), cover.end());
  return std::all_of(bg.edges.begin(), bg.edges.end(), [&](const auto& e) {
    return in_cover.contains(e.first) || in_cover.contains(e.second);
  });
}

}  // namespace ineqprice
