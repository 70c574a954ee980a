#ifndef INEQPRICE_REDUCTIONS_H_
#define INEQPRICE_REDUCTIONS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ineqprice/instance.h"
#include "ineqprice/rational.h"
#include "ineqprice/terminal_graph.h"

namespace ineqprice {

// A constructed pricing instance plus what is needed to check it.
struct ReductionOutput {
  Instance instance;
  // Revenue threshold (R_q) where the construction defines one.
  std::optional<Revenue> threshold;
  // Source node -> target node ids. The images partition the target nodes.
  std::vector<std::vector<NodeId>> bundle_map;
  // Source ids of the three terminals, in bundle order; empty for the
  // multi-demand reduction.
  std::vector<NodeId> terminals;
  // Construction constants (k, t, epsilon, c(r), bundle sizes, ...).
  std::map<std::string, Rational> params;
};

// ---------------------------------------------------------------------------
// Multi-demand -> unit demand.

inline constexpr std::int64_t kDefaultExpansionCap = 1'000'000;

// Node v becomes a clique of demand(v) unit-demand copies valued val(v) with
// zero slack inside; every source edge becomes the complete bipartite join of
// the two cliques with the source slacks in each orientation. Copies of node
// v get consecutive ids. Throws SizeLimitError when the total demand exceeds
// size_cap.
ReductionOutput multi_demand_reduce(const Instance& inst,
                                    std::int64_t size_cap = kDefaultExpansionCap);

// Gives each source node the highest price offered to any of its copies
// (bottom if none). Throws ValidationError if pv is infeasible for the reduced
// instance. The result is feasible for `original` and earns at least as much.
PriceVector lift_solution(const Instance& original,
                          const ReductionOutput& reduced,
                          const PriceVector& pv);

// ---------------------------------------------------------------------------
// 3-terminal node cut -> pricing (NP-hardness construction).

struct TncOptions {
  // Slack on every edge, both ways. Defaults to the largest a with
  // 27 a^3 <= k (the k^{1/3}/3 bound), or the largest a with a <= k^{1-eps}
  // when scaled.
  std::optional<Price> alpha;
  // Multiply bundle sizes, k, valuations and the threshold terms by n^c,
  // c = ceil(4/eps) + 1. Construction only.
  bool scaled = false;
  Rational epsilon = Rational(1, 2);
  // Refuse constructions with more target nodes or prices than this.
  std::int64_t size_cap = 2'000'000;
};

// Requires a budget q. A graph with an odd node count is first padded with
// one isolated non-terminal so the middle bundle value is integral. Target ids:
// non-terminals (ascending, padding last) then the three terminal bundles of
// n^3 nodes each. Prices {1..k}, k = n^3 + n^2; non-terminals valued k; bundle
// i (1-based) valued n^3 + (i-1) n^2 / 2. Threshold
//   R_q = (n - 3 - q) n^3 + sum_i n^3 (n^3 + (i-1) n^2 / 2).
ReductionOutput tnc_to_pricing(const TerminalGraph& g,
                               const TncOptions& options = {});

// Forward direction: bottom on the images of `cut`; every other target node
// is priced at the valuation of the terminal bundle in its component, or at
// its own valuation when its component holds no bundle. Works for both the
// node-cut and the APX construction. Throws ValidationError when the cut
// contains a terminal, exceeds the budget, or does not separate.
PriceVector separator_to_prices(const TerminalGraph& g,
                                std::span<const NodeId> cut,
                                const ReductionOutput& red);

// ---------------------------------------------------------------------------
// 3-terminal (edge) cut -> 3-terminal node cut (linear reduction).

struct SubdividedGraph {
  TerminalGraph graph;  // H with the new terminals S'
  // Source vertex -> its bundle of deg + 1 target vertices.
  std::vector<std::vector<NodeId>> bundles;
  // Source edge index -> its subdivision vertex.
  std::vector<NodeId> edge_vertex;
};

// Every edge gets a middle vertex; every source vertex v becomes deg(v) + 1
// copies joined to the middle vertices of its edges. Bundles take ids in
// source order, then the middle vertices in edge order. Each new terminal is
// the lowest id of its bundle.
SubdividedGraph tc_to_tnc(const TerminalGraph& g);

// Maps a node cut of H separating S' to an edge cut of g separating S:
// whole bundles in the cut are swapped for their neighbouring middle
// vertices, leftover bundle vertices are dropped, and the remaining middle
// vertices name the edges. Returns ascending edge indices. Throws
// ValidationError when `cut` does not separate S'.
std::vector<std::size_t> tnc_solution_transform(const TerminalGraph& g,
                                                const SubdividedGraph& h,
                                                std::span<const NodeId> cut);

// ---------------------------------------------------------------------------
// APX construction (all slacks zero).

// eps = min(1/2, r - 1), t = ceil(42 / eps), bundles of 4 t n nodes, prices
// {1..t}, non-terminals valued t, bundle i valued t + i - 3,
// c(r) = 1 - 1/(20 t^2). Same id layout as tnc_to_pricing. Requires r > 1.
ReductionOutput apx_construct(const TerminalGraph& g, const Rational& r);

// Canonical form of a feasible vector on an APX instance. First, any bundle
// that is entirely bottom is priced at its valuation and its neighbours get
// bottom. Then, while bundles i < j share a component once bottom nodes are
// deleted (pairs taken in ascending order, rescanning after each change):
// if no node of bundle i is priced at or below its valuation, bundle i is
// priced at its valuation, otherwise bundle j is; either way its neighbours
// get bottom. Throws ValidationError if pv is infeasible.
PriceVector apx_canonicalize(const ReductionOutput& red, const PriceVector& pv);

// Source non-terminals whose image is bottom in the canonical vector, checked
// to separate the terminal bundles. Ascending.
std::vector<NodeId> apx_extract(const ReductionOutput& red,
                                const PriceVector& pv);

}  // namespace ineqprice

#endif  // INEQPRICE_REDUCTIONS_H_
