#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hkdim/corpus.hpp"
#include "hkdim/errors.hpp"
#include "hkdim/cycles.hpp"
#include "hkdim/gk.hpp"
#include "hkdim/graph.hpp"
#include "hkdim/growth.hpp"
#include "hkdim/json_io.hpp"
#include "hkdim/rewrite.hpp"
#include "hkdim/structure.hpp"
#include "hkdim/witness.hpp"
#include "hkdim/word.hpp"

namespace py = pybind11;

namespace {

using namespace hkdim;

// Rewriting works with any total order; the canonical analysis order only
// exists when the dimension is finite, so fall back to declaration order.
VertexOrder default_order(const OrientedGraph& g) {
  if (finiteness_check(g).finite) {
    return build_order(g, analyze_cycle_structure(g));
  }
  return VertexOrder::declaration_order(g.vertex_count());
}

std::vector<std::vector<std::string>> cycles_as_names(const OrientedGraph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cycle : simple_cycles(g)) {
    std::vector<std::string> names;
    for (int v : cycle.vertices) names.push_back(g.name(v));
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(hkdim, m) {
  using namespace hkdim;
  m.doc() = "Growth invariants of Hecke-Kiselman monoid algebras of oriented "
            "graphs: the closed dimension formula, a confluent rewriting "
            "engine, a normal-word enumeration oracle, and the star-expression "
            "lower-bound witness.";

  py::register_exception<Error>(m, "HkdimError");

  py::class_<OrientedGraph>(m, "OrientedGraph")
      .def_static("parse", &OrientedGraph::parse, py::arg("text"))
      .def_property_readonly("vertices", &OrientedGraph::names)
      .def_property_readonly("arcs",
                             [](const OrientedGraph& g) {
                               std::vector<std::pair<std::string, std::string>>
                                   out;
                               for (auto [u, v] : g.arcs())
                                 out.emplace_back(g.name(u), g.name(v));
                               return out;
                             })
      .def("to_text", &OrientedGraph::to_text)
      .def("__repr__", [](const OrientedGraph& g) {
        return "<OrientedGraph " + std::to_string(g.vertex_count()) +
               " vertices, " + std::to_string(g.arc_count()) + " arcs>";
      });

  py::class_<CycleSummand>(m, "CycleSummand")
      .def_readonly("cycle", &CycleSummand::cycle)
      .def_readonly("adjacent", &CycleSummand::adjacent)
      .def_readonly("summand", &CycleSummand::summand);

  py::class_<GkReport>(m, "GkReport")
      .def_readonly("finite", &GkReport::finite)
      .def_readonly("gk", &GkReport::gk)
      .def_readonly("cycles", &GkReport::cycles)
      .def_readonly("per_cycle", &GkReport::per_cycle)
      .def("json", [](const GkReport& r) { return nlohmann::json(r).dump(); });

  py::class_<DegreeEstimate>(m, "DegreeEstimate")
      .def_readonly("estimate", &DegreeEstimate::estimate)
      .def_readonly("rounded", &DegreeEstimate::rounded)
      .def_readonly("residual", &DegreeEstimate::residual);

  py::class_<CrossValidation>(m, "CrossValidation")
      .def_property_readonly(
          "formula", [](const CrossValidation& cv) { return cv.formula; })
      .def_property_readonly(
          "empirical", [](const CrossValidation& cv) { return cv.empirical; })
      .def_readonly("agree", &CrossValidation::agree);

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("star_count", &WitnessReport::star_count)
      .def_readonly("formula_value", &WitnessReport::formula_value)
      .def_readonly("samples_checked", &WitnessReport::samples_checked)
      .def_readonly("all_normal", &WitnessReport::all_normal)
      .def_readonly("all_distinct", &WitnessReport::all_distinct)
      .def("passed", &WitnessReport::passed);

  m.def("parse_graph", &OrientedGraph::parse, py::arg("text"),
        "Parse the line-oriented graph description format.");

  m.def("simple_cycles", &cycles_as_names, py::arg("graph"),
        "All simple directed cycles, canonical rotation and order.");

  m.def(
      "is_finite",
      [](const OrientedGraph& g) { return finiteness_check(g).finite; },
      py::arg("graph"),
      "True when no two distinct simple cycles are joined by a path.");

  m.def("gk_dimension", &gk_dimension, py::arg("graph"),
        "The Gelfand-Kirillov dimension report of the monoid algebra.");

  m.def(
      "normal_form",
      [](const OrientedGraph& g, const std::string& word) {
        auto order = default_order(g);
        auto result = normal_form(g, order, parse_word(g, word));
        return format_word(g, result.normal);
      },
      py::arg("graph"), py::arg("word"),
      "Canonical normal form of a word, in the canonical vertex order.");

  m.def(
      "is_normal",
      [](const OrientedGraph& g, const std::string& word) {
        return is_normal(g, default_order(g), parse_word(g, word));
      },
      py::arg("graph"), py::arg("word"));

  m.def(
      "enumerate_density",
      [](const OrientedGraph& g, int max_len, long long budget) {
        auto series = enumerate_normal_words(g, default_order(g), max_len,
                                             EnumerationOptions{budget, 1});
        return py::make_tuple(series.density, series.cumulative,
                              series.truncated);
      },
      py::arg("graph"), py::arg("max_len"), py::arg("budget") = 10'000'000LL,
      "Counts of normal words by length: (density, cumulative, truncated).");

  m.def(
      "cross_validate",
      [](const OrientedGraph& g, int max_len, bool force) {
        CrossValidateOptions options;
        options.force = force;
        return cross_validate(g, max_len, options);
      },
      py::arg("graph"), py::arg("max_len"), py::arg("force") = false,
      "Compare the closed formula against the enumerated growth degree.");

  m.def(
      "backbone_word",
      [](const OrientedGraph& g) {
        auto cs = analyze_cycle_structure(g);
        auto order = build_order(g, cs);
        return format_word(g, build_backbone_word(g, cs, order));
      },
      py::arg("graph"),
      "The non-cycle scaffold word of the lower-bound witness.");

  m.def(
      "star_expression",
      [](const OrientedGraph& g) {
        auto cs = analyze_cycle_structure(g);
        auto order = build_order(g, cs);
        return format_star_expression(g, build_star_expression(g, cs, order));
      },
      py::arg("graph"),
      "The lower-bound witness family, blocks rendered as `( word )+`.");

  m.def(
      "verify_witness",
      [](const OrientedGraph& g, int grid_max) {
        auto cs = analyze_cycle_structure(g);
        auto order = build_order(g, cs);
        auto expr = build_star_expression(g, cs, order);
        WitnessOptions options;
        options.grid_max = grid_max;
        return verify_witness(g, expr, options);
      },
      py::arg("graph"), py::arg("grid_max") = 3,
      "Instantiate the witness family over an exponent grid and check it.");

  m.def(
      "generate_corpus",
      [](std::uint64_t seed, int count, bool finite_only) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.count = count;
        spec.constraint = finite_only ? CorpusSpec::Constraint::MustBeFinite
                                      : CorpusSpec::Constraint::Any;
        std::vector<std::string> texts;
        for (const auto& entry : generate_corpus(spec))
          texts.push_back(entry.graph.to_text());
        return texts;
      },
      py::arg("seed"), py::arg("count"), py::arg("finite_only") = true,
      "Deterministic random graph corpus, serialized in the text format.");
}
