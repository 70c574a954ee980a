#ifndef INEQPRICE_REDUCTIONS_IO_H_
#define INEQPRICE_REDUCTIONS_IO_H_

#include <string>
#include <string_view>

#include "ineqprice/reductions.h"
#include "ineqprice/terminal_graph.h"

namespace ineqprice {

// Terminal-graph document:
//   { "n": int, "edges": [[u, v], ...], "terminals": [a, b, c], "q": int }
// "q" is optional. Throws ParseError or ValidationError.
TerminalGraph parse_terminal_graph(std::string_view text);
std::string serialize_terminal_graph(const TerminalGraph& g);

// Sidecar document for a reduction output: reduction name, threshold (or
// null), source terminals, params (integers, or "p/q" strings when not
// integral) and bundle_map as an array of id arrays.
std::string serialize_sidecar(const std::string& reduction,
                              const ReductionOutput& red);

// Sidecar for tc-to-tnc: the node-cut graph H plus bundles and edge_vertex.
std::string serialize_subdivision(const SubdividedGraph& h);

}  // namespace ineqprice

#endif  // INEQPRICE_REDUCTIONS_IO_H_
