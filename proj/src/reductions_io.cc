#include "ineqprice/reductions_io.h"

#include <limits>

#include <nlohmann/json.hpp>

#include "ineqprice/errors.h"

namespace ineqprice {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

NodeId node_id(const json& value, const char* where) {
  if (!value.is_number_integer()) {
    throw ParseError(std::string(where) + ": expected an integer node id");
  }
  const auto id = value.get<std::int64_t>();
  if (id < 0 || id > std::numeric_limits<NodeId>::max()) {
    throw ValidationError(std::string(where) + ": node id out of range");
  }
  return static_cast<NodeId>(id);
}

ordered_json graph_json(const TerminalGraph& g) {
  ordered_json out;
  out["n"] = g.num_nodes;
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  out["terminals"] = {g.terminals[0], g.terminals[1], g.terminals[2]};
  if (g.budget) out["q"] = *g.budget;
  return out;
}

ordered_json rational_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const BigInt num = boost::multiprecision::numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return num.convert_to<std::int64_t>();
    }
  }
  return to_string(r);
}

}  // namespace

TerminalGraph parse_terminal_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("terminal graph is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("terminal graph: expected an object");
  TerminalGraph g;
  if (!doc.contains("n")) throw ParseError("terminal graph: missing \"n\"");
  g.num_nodes = node_id(doc["n"], "n");

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("terminal graph: \"edges\" must be an array");
  }
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("edges: each edge must be a pair [u, v]");
    }
    g.edges.emplace_back(node_id(e[0], "edges"), node_id(e[1], "edges"));
  }

  if (!doc.contains("terminals") || !doc["terminals"].is_array() ||
      doc["terminals"].size() != 3) {
    throw ParseError("terminal graph: \"terminals\" must list three ids");
  }
  for (int i = 0; i < 3; ++i) {
    g.terminals[i] = node_id(doc["terminals"][i], "terminals");
  }
  if (doc.contains("q") && !doc["q"].is_null()) {
    g.budget = node_id(doc["q"], "q");
  }
  validate_terminal_graph(g);
  return g;
}

std::string serialize_terminal_graph(const TerminalGraph& g) {
  return graph_json(g).dump(1) + "\n";
}

std::string serialize_sidecar(const std::string& reduction,
                              const ReductionOutput& red) {
  ordered_json out;
  out["reduction"] = reduction;
  out["threshold"] = red.threshold ? ordered_json(*red.threshold) : ordered_json();
  out["terminals"] = red.terminals;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : red.params) params[key] = rational_json(value);
  out["params"] = std::move(params);
  out["bundle_map"] = red.bundle_map;
  return out.dump(1) + "\n";
}

std::string serialize_subdivision(const SubdividedGraph& h) {
  ordered_json out;
  out["reduction"] = "tc-to-tnc";
  out["graph"] = graph_json(h.graph);
  out["bundles"] = h.bundles;
  out["edge_vertex"] = h.edge_vertex;
  return out.dump(1) + "\n";
}

}  // namespace ineqprice
