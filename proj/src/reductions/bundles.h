#ifndef INEQPRICE_SRC_REDUCTIONS_BUNDLES_H_
#define INEQPRICE_SRC_REDUCTIONS_BUNDLES_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "ineqprice/instance.h"
#include "ineqprice/terminal_graph.h"

namespace ineqprice::internal {

// Target graph in which each terminal of g is replaced by `bundle_size`
// copies sharing its neighbourhood. Non-terminals come first in ascending
// source order, then bundle 0, 1, 2 following g.terminals.
struct BundledGraph {
  int num_targets = 0;
  std::vector<std::vector<NodeId>> bundle_map;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

BundledGraph build_bundled_graph(const TerminalGraph& g,
                                 std::int64_t bundle_size);

// Target ids of terminal bundle i (0-based).
inline const std::vector<NodeId>& bundle_of(
    const std::vector<std::vector<NodeId>>& bundle_map,
    const std::vector<NodeId>& terminals, int i) {
  return bundle_map[terminals[i]];
}

std::vector<std::pair<NodeId, NodeId>> edge_pairs(const Instance& inst);

// component_labels over the instance graph.
std::vector<int> component_labels_of(const Instance& inst,
                                     const std::vector<bool>& removed);

}  // namespace ineqprice::internal

#endif  // INEQPRICE_SRC_REDUCTIONS_BUNDLES_H_
