#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ineqprice/approx.h"
#include "ineqprice/bipartite.h"
#include "ineqprice/errors.h"
#include "ineqprice/exact.h"
#include "ineqprice/generators.h"
#include "ineqprice/instance.h"
#include "ineqprice/instance_io.h"
#include "ineqprice/reductions.h"
#include "ineqprice/reductions_io.h"
#include "ineqprice/table.h"
#include "ineqprice/terminal_graph.h"

namespace py = pybind11;
using namespace ineqprice;

namespace {

using EdgeTuple = std::tuple<NodeId, NodeId, Price, Price>;
using PyVector = std::vector<std::optional<Price>>;

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

Rational from_python(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

Instance make_instance(std::vector<Price> prices, std::vector<Price> vals,
                       std::vector<EdgeTuple> edges,
                       std::optional<std::vector<std::int64_t>> demands) {
  std::vector<Edge> list;
  for (auto [u, v, a, b] : edges) list.push_back({u, v, a, b});
  std::vector<std::int64_t> d = demands ? *demands : std::vector<std::int64_t>(vals.size(), 1);
  return Instance(PriceSet(std::move(prices)), std::move(vals), std::move(d), std::move(list));
}

PriceVector to_vector(const PyVector& pv) { return PriceVector{pv}; }

TerminalGraph make_graph(int n, std::vector<std::pair<NodeId, NodeId>> edges,
                         std::array<NodeId, 3> terminals, std::optional<int> q) {
  TerminalGraph g{n, std::move(edges), terminals, q};
  validate_terminal_graph(g);
  return g;
}

py::dict params_dict(const ReductionOutput& red) {
  py::dict out;
  for (const auto& [key, value] : red.params) out[py::str(key)] = fraction(value);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pricing with inequity aversion";

  auto validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", validation.ptr());

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("prices"), py::arg("valuations"),
           py::arg("edges") = std::vector<EdgeTuple>{}, py::arg("demands") = py::none())
      .def_property_readonly("num_nodes", &Instance::num_nodes)
      .def_property_readonly("num_edges", &Instance::num_edges)
      .def_property_readonly("prices", [](const Instance& i) {
        return std::vector<Price>(i.prices().values().begin(), i.prices().values().end());
      })
      .def_property_readonly("valuations", [](const Instance& i) {
        return std::vector<Price>(i.valuations().begin(), i.valuations().end());
      })
      .def_property_readonly("demands", [](const Instance& i) {
        return std::vector<std::int64_t>(i.demands().begin(), i.demands().end());
      })
      .def_property_readonly("edges", [](const Instance& i) {
        std::vector<EdgeTuple> out;
        for (const Edge& e : i.edges()) out.emplace_back(e.u, e.v, e.alpha_uv, e.alpha_vu);
        return out;
      })
      .def("alpha", &Instance::alpha)
      .def("is_normalized", &Instance::is_normalized)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance n=" + std::to_string(i.num_nodes()) +
               " m=" + std::to_string(i.num_edges()) +
               " k=" + std::to_string(i.prices().size()) + ">";
      });

  py::class_<Solution>(m, "Solution")
      .def_property_readonly("prices", [](const Solution& s) { return s.prices.assignment; })
      .def_readonly("revenue", &Solution::revenue)
      .def_readonly("tag", &Solution::tag)
      .def("__repr__", [](const Solution& s) {
        return "<Solution " + s.tag + " revenue=" + std::to_string(s.revenue) + ">";
      });

  m.def("is_feasible", [](const Instance& i, const PyVector& pv) { return is_feasible(i, to_vector(pv)); });
  m.def("revenue", [](const Instance& i, const PyVector& pv) { return revenue(i, to_vector(pv)); });
  m.def("max_bound", &max_bound);
  m.def("normalize", &normalize);
  m.def("parse_instance", [](const std::string& text) { return parse_instance(text); });
  m.def("serialize_instance", &serialize_instance);

  m.def("brute_force_opt", &brute_force_opt, py::arg("instance"),
        py::arg("node_limit") = kDefaultNodeLimit);
  m.def("single_price_best", &single_price_best);
  m.def("alg_two_prices", &alg_two_prices);
  m.def("alg_general_k", &alg_general_k);
  m.def("harmonic", [](int r) { return fraction(harmonic(r)); });
  m.def("price_sum_pk", [](std::vector<Price> p) { return fraction(price_sum_pk(PriceSet(std::move(p)))); });
  m.def("guaranteed_ratio", [](std::vector<Price> p, Price alpha_star) {
    return fraction(guaranteed_ratio(PriceSet(std::move(p)), alpha_star));
  });
  m.def("general_k_ratio", [](Price vmax) { return fraction(general_k_ratio(vmax)); });
  m.def("restricted_edges", [](const Instance& i) { return restricted_subgraph(i).edges; });
  m.def("min_vertex_cover", [](const Instance& i) {
    const BipartiteRestriction bg = restricted_subgraph(i);
    return min_vertex_cover(bg, max_matching(bg));
  });

  m.def("gen_fig1", &gen_fig1, py::arg("copies") = 1, py::arg("chain") = false);
  m.def("gen_clique_harmonic", &gen_clique_harmonic);
  m.def("gen_clique_pk", &gen_clique_pk);
  m.def("gen_nd_pinch", &gen_nd_pinch);
  m.def(
      "gen_random",
      [](int n, std::vector<Price> prices, const py::object& edge_prob, Price alpha_max,
         std::int64_t max_demand, std::uint64_t seed) {
        RandomSpec spec;
        spec.n = n;
        spec.prices = PriceSet(std::move(prices));
        spec.edge_prob = from_python(edge_prob);
        spec.alpha_max = alpha_max;
        spec.max_demand = max_demand;
        spec.seed = seed;
        return gen_random(spec);
      },
      py::arg("n"), py::arg("prices"), py::arg("edge_prob") = "1/2", py::arg("alpha_max") = 0,
      py::arg("max_demand") = 1, py::arg("seed") = 0);

  py::class_<ReductionOutput>(m, "ReductionOutput")
      .def_readonly("instance", &ReductionOutput::instance)
      .def_readonly("threshold", &ReductionOutput::threshold)
      .def_readonly("bundle_map", &ReductionOutput::bundle_map)
      .def_readonly("terminals", &ReductionOutput::terminals)
      .def_property_readonly("params", &params_dict);

  m.def("multi_demand_reduce", [](const Instance& i) { return multi_demand_reduce(i); });
  m.def("lift_solution", [](const Instance& i, const ReductionOutput& red, const PyVector& pv) {
    return lift_solution(i, red, to_vector(pv)).assignment;
  });
  m.def(
      "tnc_to_pricing",
      [](int n, std::vector<std::pair<NodeId, NodeId>> edges, std::array<NodeId, 3> terminals,
         int q, std::optional<Price> alpha) {
        TncOptions options;
        options.alpha = alpha;
        return tnc_to_pricing(make_graph(n, std::move(edges), terminals, q), options);
      },
      py::arg("n"), py::arg("edges"), py::arg("terminals"), py::arg("q"),
      py::arg("alpha") = py::none());
  m.def(
      "separator_to_prices",
      [](int n, std::vector<std::pair<NodeId, NodeId>> edges, std::array<NodeId, 3> terminals,
         std::optional<int> q, std::vector<NodeId> cut, const ReductionOutput& red) {
        return separator_to_prices(make_graph(n, std::move(edges), terminals, q), cut, red)
            .assignment;
      },
      py::arg("n"), py::arg("edges"), py::arg("terminals"), py::arg("q"), py::arg("cut"),
      py::arg("reduction"));
  m.def(
      "apx_construct",
      [](int n, std::vector<std::pair<NodeId, NodeId>> edges, std::array<NodeId, 3> terminals,
         const py::object& r) {
        return apx_construct(make_graph(n, std::move(edges), terminals, std::nullopt),
                             from_python(r));
      },
      py::arg("n"), py::arg("edges"), py::arg("terminals"), py::arg("r"));
  m.def("apx_extract", [](const ReductionOutput& red, const PyVector& pv) {
    return apx_extract(red, to_vector(pv));
  });

  m.def(
      "table",
      [](bool exact) {
        return format_table_csv(default_table(), exact);
      },
      py::arg("exact") = false);
}
