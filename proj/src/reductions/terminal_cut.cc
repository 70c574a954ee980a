#include <algorithm>
#include <set>
#include <string>

#include "ineqprice/errors.h"
#include "ineqprice/reductions.h"

namespace ineqprice {

SubdividedGraph tc_to_tnc(const TerminalGraph& g) {
  validate_terminal_graph(g);
  std::vector<int> degree(g.num_nodes, 0);
  for (auto [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  SubdividedGraph out;
  out.bundles.assign(g.num_nodes, {});
  NodeId next = 0;
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    for (int c = 0; c <= degree[v]; ++c) out.bundles[v].push_back(next++);
  }
  for (auto [u, v] : g.edges) {
    const NodeId mid = next++;
    out.edge_vertex.push_back(mid);
    for (NodeId x : out.bundles[u]) out.graph.edges.emplace_back(x, mid);
    for (NodeId x : out.bundles[v]) out.graph.edges.emplace_back(x, mid);
  }
  out.graph.num_nodes = next;
  for (int i = 0; i < 3; ++i) {
    out.graph.terminals[i] = out.bundles[g.terminals[i]].front();
  }
  return out;
}

std::vector<std::size_t> tnc_solution_transform(const TerminalGraph& g,
                                                const SubdividedGraph& h,
                                                std::span<const NodeId> cut) {
  validate_terminal_graph(g);
  const int size = h.graph.num_nodes;
  std::vector<bool> in_cut(size, false);
  std::size_t original_size = 0;
  for (NodeId x : cut) {
    if (x < 0 || x >= size) {
      throw ValidationError("cut vertex " + std::to_string(x) + " is not in H");
    }
    if (std::find(h.graph.terminals.begin(), h.graph.terminals.end(), x) !=
        h.graph.terminals.end()) {
      throw ValidationError("cut contains terminal " + std::to_string(x));
    }
    if (!in_cut[x]) ++original_size;
    in_cut[x] = true;
  }
  if (!separates_nodes(h.graph, cut)) {
    throw ValidationError("cut does not separate the terminals of H");
  }

  // Incident middle vertices of every source vertex.
  std::vector<std::vector<NodeId>> middles(g.num_nodes);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    middles[g.edges[e].first].push_back(h.edge_vertex[e]);
    middles[g.edges[e].second].push_back(h.edge_vertex[e]);
  }

  // Whole bundles leave the cut and their middle vertices join it.
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId v = 0; v < g.num_nodes; ++v) {
      const auto& bundle = h.bundles[v];
      if (!std::all_of(bundle.begin(), bundle.end(),
                       [&](NodeId x) { return in_cut[x]; })) {
        continue;
      }
      for (NodeId x : bundle) in_cut[x] = false;
      for (NodeId mid : middles[v]) in_cut[mid] = true;
      changed = true;
    }
  }
  // Stray bundle vertices never disconnect anything.
  for (const auto& bundle : h.bundles) {
    for (NodeId x : bundle) in_cut[x] = false;
  }

  std::vector<std::size_t> edge_cut;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (in_cut[h.edge_vertex[e]]) edge_cut.push_back(e);
  }
  if (edge_cut.size() > original_size) {
    throw std::logic_error("edge cut grew beyond the node cut");
  }
  if (!separates_edges(g, edge_cut)) {
    throw std::logic_error("edge cut does not separate the terminals");
  }
  return edge_cut;
}

}  // namespace ineqprice
