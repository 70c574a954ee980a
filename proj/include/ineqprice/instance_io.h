#ifndef INEQPRICE_INSTANCE_IO_H_
#define INEQPRICE_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "ineqprice/instance.h"

namespace ineqprice {

// Instance document:
//   { "prices": [p1, ...],
//     "nodes": [ { "id": int, "val": int, "demand": int (optional, 1) } ],
//     "edges": [ { "u": int, "v": int, "alpha_uv": int, "alpha_vu": int } ] }
// Node ids must be exactly 0..n-1 (any order). Throws ParseError on shape
// problems and ValidationError on semantic ones.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// Price-vector document: { "assignment": { "<id>": int-or-null, ... } }.
// Every node id 0..num_nodes-1 must appear; null is the discontinuity.
PriceVector parse_price_vector(std::string_view text, int num_nodes);
// Same, taking the node count from the document.
PriceVector parse_price_vector(std::string_view text);
std::string serialize_price_vector(const PriceVector& pv);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ineqprice

#endif  // INEQPRICE_INSTANCE_IO_H_
