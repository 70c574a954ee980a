#ifndef INEQPRICE_TERMINAL_GRAPH_H_
#define INEQPRICE_TERMINAL_GRAPH_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ineqprice/instance.h"

namespace ineqprice {

// Simple undirected graph with three pairwise non-adjacent terminals and an
// optional node-cut budget q.
struct TerminalGraph {
  int num_nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::array<NodeId, 3> terminals{};
  std::optional<int> budget;
};

// Throws ValidationError on loops, duplicate or dangling edges, repeated or
// adjacent terminals, and budgets outside 0..n-3.
void validate_terminal_graph(const TerminalGraph& g);

// Component label per node of the graph with `removed` nodes and
// `removed_edges` (indices into edges) deleted; deleted nodes get -1.
std::vector<int> component_labels(int num_nodes,
                                  std::span<const std::pair<NodeId, NodeId>> edges,
                                  const std::vector<bool>& removed,
                                  const std::vector<bool>& removed_edges = {});

// True iff deleting `cut` leaves every pair of terminals in different
// components. A cut containing a terminal never separates.
bool separates_nodes(const TerminalGraph& g, std::span<const NodeId> cut);

// Same for deleting the edges with the given indices.
bool separates_edges(const TerminalGraph& g,
                     std::span<const std::size_t> edge_indices);

// Smallest terminal-separating set of non-terminals, by enumerating subsets in
// order of size (lexicographic within a size). Throws SizeLimitError when the
// graph has more than node_limit nodes.
std::vector<NodeId> min_terminal_node_cut(const TerminalGraph& g,
                                          int node_limit = 12);

}  // namespace ineqprice

#endif  // INEQPRICE_TERMINAL_GRAPH_H_
