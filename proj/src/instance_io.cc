#include "ineqprice/instance_io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "ineqprice/errors.h"

namespace ineqprice {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::int64_t integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw ParseError(where + ": expected an integer");
  }
  return value.get<std::int64_t>();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text, "instance");
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");

  const json& jp = field(doc, "prices", "instance");
  if (!jp.is_array()) throw ParseError("prices: expected an array");
  std::vector<Price> prices;
  for (const json& p : jp) prices.push_back(integer(p, "prices"));
  for (std::size_t i = 1; i < prices.size(); ++i) {
    if (prices[i] <= prices[i - 1]) {
      throw ParseError("prices: must be strictly increasing");
    }
  }

  const json& jn = field(doc, "nodes", "instance");
  if (!jn.is_array()) throw ParseError("nodes: expected an array");
  const auto n = jn.size();
  std::vector<Price> vals(n, 0);
  std::vector<std::int64_t> demands(n, 1);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const json& node = jn[i];
    const std::string where = "nodes[" + std::to_string(i) + "]";
    if (!node.is_object()) throw ParseError(where + ": expected an object");
    const std::int64_t id = integer(field(node, "id", where), where + ".id");
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
      throw ParseError(where + ": id " + std::to_string(id) +
                       " outside 0.." + std::to_string(n - 1));
    }
    if (seen[id]) {
      throw ParseError(where + ": duplicate id " + std::to_string(id));
    }
    seen[id] = true;
    vals[id] = integer(field(node, "val", where), where + ".val");
    if (auto d = node.find("demand"); d != node.end()) {
      demands[id] = integer(*d, where + ".demand");
    }
  }

  const json& je = field(doc, "edges", "instance");
  if (!je.is_array()) throw ParseError("edges: expected an array");
  std::vector<Edge> edges;
  edges.reserve(je.size());
  for (std::size_t i = 0; i < je.size(); ++i) {
    const json& e = je[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    Edge edge;
    edge.u = static_cast<NodeId>(integer(field(e, "u", where), where + ".u"));
    edge.v = static_cast<NodeId>(integer(field(e, "v", where), where + ".v"));
    edge.alpha_uv = integer(field(e, "alpha_uv", where), where + ".alpha_uv");
    edge.alpha_vu = integer(field(e, "alpha_vu", where), where + ".alpha_vu");
    for (NodeId end : {edge.u, edge.v}) {
      if (end < 0 || static_cast<std::size_t>(end) >= n) {
        throw ParseError(where + ": endpoint " + std::to_string(end) +
                         " is not a node id");
      }
    }
    if (edge.alpha_uv < 0 || edge.alpha_vu < 0) {
      throw ParseError(where + ": alpha must be nonnegative");
    }
    edges.push_back(edge);
  }
  return Instance(PriceSet(std::move(prices)), std::move(vals),
                  std::move(demands), std::move(edges));
}

std::string serialize_instance(const Instance& inst) {
  ordered_json doc;
  doc["prices"] = ordered_json::array();
  for (Price p : inst.prices().values()) doc["prices"].push_back(p);
  doc["nodes"] = ordered_json::array();
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    doc["nodes"].push_back(
        {{"id", v}, {"val", inst.val(v)}, {"demand", inst.demand(v)}});
  }
  doc["edges"] = ordered_json::array();
  for (const Edge& e : inst.edges()) {
    doc["edges"].push_back({{"u", e.u},
                            {"v", e.v},
                            {"alpha_uv", e.alpha_uv},
                            {"alpha_vu", e.alpha_vu}});
  }
  return doc.dump(1) + "\n";
}

PriceVector parse_price_vector(std::string_view text) {
  const json doc = parse_json(text, "price vector");
  if (!doc.is_object()) throw ParseError("price vector: expected an object");
  const json& ja = field(doc, "assignment", "price vector");
  if (!ja.is_object()) throw ParseError("assignment: expected an object");
  return parse_price_vector(text, static_cast<int>(ja.size()));
}

PriceVector parse_price_vector(std::string_view text, int num_nodes) {
  const json doc = parse_json(text, "price vector");
  if (!doc.is_object()) throw ParseError("price vector: expected an object");
  const json& ja = field(doc, "assignment", "price vector");
  if (!ja.is_object()) throw ParseError("assignment: expected an object");
  PriceVector pv = PriceVector::all_bottom(num_nodes);
  std::vector<bool> seen(num_nodes, false);
  for (const auto& [key, value] : ja.items()) {
    std::size_t used = 0;
    long id = -1;
    try {
      id = std::stol(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || id < 0 || id >= num_nodes) {
      throw ParseError("assignment: key \"" + key + "\" is not a node id in 0.." +
                       std::to_string(num_nodes - 1));
    }
    seen[id] = true;
    if (value.is_null()) continue;
    pv[id] = integer(value, "assignment[\"" + key + "\"]");
  }
  for (int v = 0; v < num_nodes; ++v) {
    if (!seen[v]) {
      throw ParseError("assignment: node " + std::to_string(v) + " is missing");
    }
  }
  return pv;
}

std::string serialize_price_vector(const PriceVector& pv) {
  ordered_json assignment = ordered_json::object();
  for (std::size_t v = 0; v < pv.size(); ++v) {
    if (pv[v]) {
      assignment[std::to_string(v)] = *pv[v];
    } else {
      assignment[std::to_string(v)] = nullptr;
    }
  }
  ordered_json doc;
  doc["assignment"] = std::move(assignment);
  return doc.dump(1) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << contents;
}

}  // namespace ineqprice
