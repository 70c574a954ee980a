#include "reductions/bundles.h"

#include <algorithm>

namespace ineqprice::internal {

BundledGraph build_bundled_graph(const TerminalGraph& g,
                                 std::int64_t bundle_size) {
  BundledGraph out;
  out.bundle_map.assign(g.num_nodes, {});
  auto is_terminal = [&](NodeId v) {
    return std::find(g.terminals.begin(), g.terminals.end(), v) !=
           g.terminals.end();
  };
  NodeId next = 0;
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    if (!is_terminal(v)) out.bundle_map[v].push_back(next++);
  }
  for (NodeId t : g.terminals) {
    auto& bundle = out.bundle_map[t];
    bundle.reserve(static_cast<std::size_t>(bundle_size));
    for (std::int64_t c = 0; c < bundle_size; ++c) bundle.push_back(next++);
  }
  out.num_targets = next;
  for (auto [u, v] : g.edges) {
    for (NodeId a : out.bundle_map[u]) {
      for (NodeId b : out.bundle_map[v]) out.edges.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<NodeId, NodeId>> edge_pairs(const Instance& inst) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(inst.num_edges());
  for (const Edge& e : inst.edges()) pairs.emplace_back(e.u, e.v);
  return pairs;
}

std::vector<int> component_labels_of(const Instance& inst,
                                     const std::vector<bool>& removed) {
  return component_labels(inst.num_nodes(), edge_pairs(inst), removed);
}

}  // namespace ineqprice::internal
