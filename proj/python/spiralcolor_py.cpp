#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spiralcolor/coloring.hpp"
#include "spiralcolor/generators.hpp"
#include "spiralcolor/harness.hpp"
#include "spiralcolor/oracle.hpp"
#include "spiralcolor/serialize.hpp"
#include "spiralcolor/spiral.hpp"

namespace py = pybind11;
using namespace spiralcolor;

namespace {

ForbiddenCycles lengths(bool strict) { return strict ? ForbiddenCycles::strict() : ForbiddenCycles::standard(); }

SpiralDecomposition run_decompose(const PlanarGraph& g, std::optional<int> start, const std::string& orientation) {
  return decompose(g, start ? *start : default_start(g), parse_orientation(orientation));
}

Coloring to_coloring(const std::vector<int>& ranks) {
  Coloring c;
  for (int r : ranks) c.push_back(r == 0 ? std::nullopt : std::optional<Color>(color_from_rank(r)));
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spiral-chain decomposition and priority 3-coloring of plane graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<CrossCheckError>(m, "CrossCheckError", PyExc_RuntimeError);

  py::class_<PlanarGraph>(m, "PlanarGraph")
      .def_static("build", &PlanarGraph::build, py::arg("n"), py::arg("rotation"), py::arg("outer_face"))
      .def_static("from_json", [](const std::string& text) { return graph_from_json(parse_json(text)); })
      .def("to_json", [](const PlanarGraph& g) { return dump_compact(graph_to_json(g)); })
      .def_property_readonly("vertex_count", &PlanarGraph::vertex_count)
      .def_property_readonly("edge_count", &PlanarGraph::edge_count)
      .def_property_readonly("rotation", [](const PlanarGraph& g) { return g.rotation(); })
      .def_property_readonly("outer_face",
                             [](const PlanarGraph& g) { return std::vector<int>(g.outer_face().begin(), g.outer_face().end()); })
      .def_property_readonly("faces", &PlanarGraph::faces)
      .def_property_readonly("fingerprint", &PlanarGraph::fingerprint)
      .def("__repr__", [](const PlanarGraph& g) {
        return "<PlanarGraph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("find_short_cycles", [](const PlanarGraph& g, bool strict) { return find_short_cycles(g, lengths(strict)).cycles; },
        py::arg("graph"), py::arg("strict") = false);
  m.def("triangles", [](const PlanarGraph& g) {
    std::vector<std::tuple<int, int, int>> out;
    for (auto t : triangles_of(g)) out.emplace_back(t.a, t.b, t.c);
    return out;
  });
  m.def("is_g6", [](const PlanarGraph& g, bool strict) { return is_g6(g, lengths(strict)); }, py::arg("graph"),
        py::arg("strict") = false);

  m.def("decompose_json",
        [](const PlanarGraph& g, std::optional<int> start, const std::string& orientation) {
          return dump_compact(decomposition_to_json(run_decompose(g, start, orientation)));
        },
        py::arg("graph"), py::arg("start") = py::none(), py::arg("orientation") = "cw");
  m.def("color_json",
        [](const PlanarGraph& g, std::optional<int> start, const std::string& orientation, bool trace) {
          return dump_compact(outcome_to_json(color(g, run_decompose(g, start, orientation)), trace));
        },
        py::arg("graph"), py::arg("start") = py::none(), py::arg("orientation") = "cw", py::arg("trace") = false);
  m.def("verify",
        [](const PlanarGraph& g, const std::vector<int>& ranks) {
          std::vector<std::pair<int, int>> out;
          for (auto e : verify(g, to_coloring(ranks))) out.emplace_back(e.u, e.v);
          return out;
        },
        py::arg("graph"), py::arg("colors"));
  m.def("exact_3color_json",
        [](const PlanarGraph& g, std::uint64_t budget) { return dump_compact(verdict_to_json(exact_3color(g, budget))); },
        py::arg("graph"), py::arg("budget") = kDefaultNodeBudget);
  m.def("cross_check",
        [](const PlanarGraph& g, std::optional<int> start, const std::string& orientation, std::uint64_t budget,
           bool strict) {
          auto outcome = color(g, run_decompose(g, start, orientation));
          auto verdict = exact_3color(g, budget);
          return std::string(to_string(cross_check(g, outcome, verdict, lengths(strict))));
        },
        py::arg("graph"), py::arg("start") = py::none(), py::arg("orientation") = "cw",
        py::arg("budget") = kDefaultNodeBudget, py::arg("strict") = false);

  m.def("gadget_hexagon_triangles", [](int t) { return gadget_hexagon_triangles(t).graph; }, py::arg("triangles") = 6);
  m.def("gadget_three_triangles_hub", [] { return gadget_three_triangles_hub().graph; });
  m.def("gen_random_g6",
        [](int n, double p, std::uint64_t seed, bool strict) { return gen_random_g6(n, p, seed, lengths(strict)).graph; },
        py::arg("n"), py::arg("attach_probability"), py::arg("seed"), py::arg("strict") = false);

  m.def("hunt_json",
        [](std::uint64_t seed, std::uint64_t count, int n_min, int n_max, int workers, bool strict) {
          RunConfig config;
          config.seed_begin = seed;
          config.seed_count = count;
          config.n_min = n_min;
          config.n_max = n_max;
          config.workers = workers;
          config.strict = strict;
          py::gil_scoped_release release;
          return dump_compact(hunt(config).summary_json());
        },
        py::arg("seed") = 0, py::arg("count") = 100, py::arg("n_min") = 10, py::arg("n_max") = 40,
        py::arg("workers") = 1, py::arg("strict") = false);
}
