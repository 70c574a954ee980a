#ifndef INEQPRICE_BIPARTITE_H_
#define INEQPRICE_BIPARTITE_H_

#include <utility>
#include <vector>

#include "ineqprice/instance.h"

namespace ineqprice {

// The binding part of a two-price instance: edges from a node valued p2
// (left) to a node valued p1 (right) whose slack alpha(left, right) is below
// p2 - p1. alpha_star is the largest reverse slack alpha(right, left) over
// those edges, 0 when there are none.
struct BipartiteRestriction {
  std::vector<NodeId> left;   // valued p2, ascending
  std::vector<NodeId> right;  // valued p1, ascending
  std::vector<std::pair<NodeId, NodeId>> edges;  // (left, right), sorted
  Price alpha_star = 0;
};

struct Matching {
  std::vector<std::pair<NodeId, NodeId>> pairs;  // (left, right)

  std::size_t size() const { return pairs.size(); }
};

// Requires exactly two prices and every valuation in the price set.
BipartiteRestriction restricted_subgraph(const Instance& inst);

// Maximum-cardinality matching by augmenting paths. Left vertices are
// processed in ascending id with ascending adjacency, so the result is
// reproducible.
Matching max_matching(const BipartiteRestriction& bg);

// Minimum vertex cover from a maximum matching (Konig): with Z the vertices
// reachable from unmatched left vertices along alternating paths, the cover is
// (left \ Z) u (right n Z). Throws ValidationError if m is not a matching of
// bg or is not maximum. Returned ids are ascending.
std::vector<NodeId> min_vertex_cover(const BipartiteRestriction& bg,
                                     const Matching& m);

bool covers_all_edges(const BipartiteRestriction& bg,
                      const std::vector<NodeId>& cover);

}  // namespace ineqprice

#endif  // INEQPRICE_BIPARTITE_H_
