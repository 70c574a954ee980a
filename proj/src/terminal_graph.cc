#include "ineqprice/terminal_graph.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ineqprice/errors.h"

namespace ineqprice {

void validate_terminal_graph(const TerminalGraph& g) {
  if (g.num_nodes < 3) {
    throw ValidationError("terminal graph needs at least three nodes");
  }
  std::set<std::pair<NodeId, NodeId>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.num_nodes || v >= g.num_nodes) {
      throw ValidationError("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") references an unknown node");
    }
    if (u == v) throw ValidationError("self loop on node " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw ValidationError("duplicate edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const NodeId t = g.terminals[i];
    if (t < 0 || t >= g.num_nodes) {
      throw ValidationError("terminal " + std::to_string(t) + " is not a node");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const NodeId s = g.terminals[j];
      if (s == t) throw ValidationError("terminals must be distinct");
      if (seen.contains({std::min(s, t), std::max(s, t)})) {
        throw ValidationError("terminals " + std::to_string(s) + " and " +
                              std::to_string(t) + " are adjacent");
      }
    }
  }
  if (g.budget && (*g.budget < 0 || *g.budget > g.num_nodes - 3)) {
    throw ValidationError("budget q = " + std::to_string(*g.budget) +
                          " must lie in 0..n-3 = 0.." +
                          std::to_string(g.num_nodes - 3));
  }
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool terminals_apart(const TerminalGraph& g, const std::vector<int>& labels) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (labels[g.terminals[i]] < 0) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[g.terminals[i]] == labels[g.terminals[j]]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> component_labels(
    int num_nodes, std::span<const std::pair<NodeId, NodeId>> edges,
    const std::vector<bool>& removed, const std::vector<bool>& removed_edges) {
  std::vector<int> parent(num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!removed_edges.empty() && removed_edges[i]) continue;
    auto [u, v] = edges[i];
    if (removed[u] || removed[v]) continue;
    parent[find_root(parent, u)] = find_root(parent, v);
  }
  std::vector<int> labels(num_nodes, -1);
  for (int v = 0; v < num_nodes; ++v) {
    if (!removed[v]) labels[v] = find_root(parent, v);
  }
  return labels;
}

bool separates_nodes(const TerminalGraph& g, std::span<const NodeId> cut) {
  std::vector<bool> removed(g.num_nodes, false);
  for (NodeId v : cut) {
    if (v < 0 || v >= g.num_nodes) {
      throw ValidationError("cut node " + std::to_string(v) + " is not a node");
    }
    removed[v] = true;
  }
  return terminals_apart(g, component_labels(g.num_nodes, g.edges, removed));
}

bool separates_edges(const TerminalGraph& g,
                     std::span<const std::size_t> edge_indices) {
  std::vector<bool> removed_edges(g.edges.size(), false);
  for (std::size_t i : edge_indices) {
    if (i >= g.edges.size()) {
      throw ValidationError("edge index " + std::to_string(i) + " out of range");
    }
    removed_edges[i] = true;
  }
  const std::vector<bool> removed(g.num_nodes, false);
  return terminals_apart(
      g, component_labels(g.num_nodes, g.edges, removed, removed_edges));
}

std::vector<NodeId> min_terminal_node_cut(const TerminalGraph& g,
                                          int node_limit) {
  validate_terminal_graph(g);
  if (g.num_nodes > node_limit) {
    throw SizeLimitError("node-cut search refused: " +
                         std::to_string(g.num_nodes) +
                         " nodes exceeds the limit of " +
                         std::to_string(node_limit));
  }
  std::vector<NodeId> candidates;
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    if (std::find(g.terminals.begin(), g.terminals.end(), v) ==
        g.terminals.end()) {
      candidates.push_back(v);
    }
  }
  const std::size_t m = candidates.size();
  for (std::size_t size = 0; size <= m; ++size) {
    // Lexicographic walk over size-element index combinations.
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<NodeId> cut;
      for (std::size_t i : idx) cut.push_back(candidates[i]);
      if (separates_nodes(g, cut)) return cut;
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  // Unreachable for a valid graph: all non-terminals always separate.
  throw std::logic_error("no separating node set found");
}

}  // namespace ineqprice
