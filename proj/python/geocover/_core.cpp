#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "geocover/bits.hpp"
#include "geocover/driver.hpp"
#include "geocover/io.hpp"
#include "geocover/standard_graphs.hpp"
#include "geocover/triple.hpp"

namespace py = pybind11;
using namespace geocover;

namespace {

// Results travel as plain Python containers, built from the same JSON the
// CLI writes.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Multigraph make_graph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
  Json doc;
  doc["vertices"] = vertices;
  doc["edges"] = Json::array();
  for (const auto& [u, v] : edges) doc["edges"].push_back({u, v});
  return parse_graph(doc.dump());
}

std::vector<PathSeq> parse_paths(const py::object& paths, const SubdividedGraph& sg) {
  Json doc;
  doc["paths"] = from_py(paths);
  return parse_cover(doc.dump(), sg);
}

PathSystem make_system(const std::vector<std::vector<std::string>>& paths, std::size_t want) {
  if (paths.size() != want) {
    throw ParseError("expected " + std::to_string(want) + " paths, got " + std::to_string(paths.size()));
  }
  PathSystem s;
  s.paths = paths;
  realize(s);  // validates labels
  return s;
}

py::dict report_dict(const CoverNumberReport& r) {
  py::dict d;
  d["mode"] = to_string(r.mode);
  d["cover_number"] = r.cover_number;
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  if (r.distinct_count) d["distinct"] = *r.distinct_count;
  py::list ws;
  for (const auto& w : r.witnesses) {
    py::dict x;
    x["paths"] = to_py(cover_to_json(w.paths, r.subdivided)["paths"]);
    x["weights"] = to_py(weights_to_json(w.weights, r.subdivided)["weights"]);
    ws.append(x);
  }
  d["witnesses"] = ws;
  d["search_nodes"] = r.counters.search_nodes;
  return d;
}

DriverOptions options(bool unweighted, std::optional<int> max_size, std::optional<std::uint64_t> max_nodes) {
  DriverOptions o;
  o.mode = unweighted ? Mode::unweighted : Mode::weighted;
  o.max_size = max_size;
  if (max_nodes) o.max_search_nodes = *max_nodes;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geodesic cover numbers and path-system classification";

  // Module-lifetime exception types; the module is never unloaded.
  static PyObject* parse_exc = PyErr_NewException("geocover.ParseError", PyExc_ValueError, nullptr);
  static PyObject* contract_exc = PyErr_NewException("geocover.ContractError", PyExc_ValueError, nullptr);
  static PyObject* limit_exc = PyErr_NewException("geocover.BudgetExhausted", PyExc_RuntimeError, nullptr);
  m.attr("ParseError") = py::handle(parse_exc);
  m.attr("ContractError") = py::handle(contract_exc);
  m.attr("BudgetExhausted") = py::handle(limit_exc);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExhausted& e) {
      py::object err = py::handle(limit_exc)(e.what());
      err.attr("lower") = e.lower;
      err.attr("upper") = e.upper;
      py::set_error(py::handle(limit_exc), err);
    } catch (const LimitExceeded& e) {
      py::set_error(py::handle(limit_exc), e.what());
    } catch (const ParseError& e) {
      py::set_error(py::handle(parse_exc), e.what());
    } catch (const ContractError& e) {
      py::set_error(py::handle(contract_exc), e.what());
    }
  });

  py::class_<Multigraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertices"), py::arg("edges"))
      .def_static(
          "standard",
          [](const std::string& tag, py::args params) {
            std::vector<int> ps;
            for (auto p : params) ps.push_back(p.cast<int>());
            return build_standard(tag, ps);
          },
          py::arg("tag"))
      .def_static("from_json", [](const std::string& text) { return parse_graph(text); })
      .def("to_json", [](const Multigraph& g) { return graph_to_json(g).dump(2); })
      .def_property_readonly("num_vertices", &Multigraph::num_vertices)
      .def_property_readonly("num_edges", &Multigraph::num_edges)
      .def_property_readonly("vertices",
                             [](const Multigraph& g) {
                               std::vector<std::string> out;
                               for (std::size_t v = 0; v < g.num_vertices(); ++v) out.push_back(g.name(static_cast<VertexId>(v)));
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const Multigraph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (std::size_t e = 0; e < g.num_edges(); ++e) {
                                 const auto& ed = g.edge(static_cast<EdgeId>(e));
                                 out.emplace_back(g.name(ed.u), g.name(ed.v));
                               }
                               return out;
                             })
      .def("__repr__", [](const Multigraph& g) {
        return "<Graph " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
               " edges>";
      });

  m.def("standard_graph_tags", &standard_graph_tags);
  m.def("lower_bound", &lower_bound, py::arg("graph"));
  m.def("upper_bound", &upper_bound, py::arg("graph"));

  m.def(
      "cover_number",
      [](const Multigraph& g, bool unweighted, std::optional<int> max_size, std::optional<std::uint64_t> max_nodes) {
        CoverNumberReport r;
        {
          py::gil_scoped_release nogil;
          r = cover_number(g, options(unweighted, max_size, max_nodes));
        }
        return report_dict(r);
      },
      py::arg("graph"), py::kw_only(), py::arg("unweighted") = false, py::arg("max_size") = py::none(),
      py::arg("max_nodes") = py::none());

  m.def(
      "distinct_optimal_covers",
      [](const Multigraph& g, bool unweighted, std::optional<std::uint64_t> max_nodes) {
        CoverNumberReport r;
        {
          py::gil_scoped_release nogil;
          r = distinct_optimal_covers(g, options(unweighted, std::nullopt, max_nodes));
        }
        return report_dict(r);
      },
      py::arg("graph"), py::kw_only(), py::arg("unweighted") = false, py::arg("max_nodes") = py::none());

  m.def(
      "check_cover",
      [](const Multigraph& g, const py::object& paths, const py::object& weights) {
        const SubdividedGraph sg = two_subdivision(g);
        const auto ps = parse_paths(paths, sg);
        const PathPool pool(sg);
        Cover c;
        Bits covered(sg.num_segments());
        for (const auto& p : ps) {
          c.push_back(*pool.find(p));
          covered |= pool.segments_of(c.back());
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        py::list missing;
        for (std::size_t s = 0; s < sg.num_segments(); ++s) {
          if (!covered.test(s)) missing.append(sg.segment_name(static_cast<EdgeId>(s)));
        }
        py::dict d;
        d["missing_segments"] = missing;
        d["retracted"] = is_retracted(std::span<const PathSeq>(ps));
        if (!weights.is_none()) {
          Json doc;
          doc["weights"] = from_py(weights);
          d["accepted"] = check_fixed_weights(ps, parse_weights(doc.dump(), sg), sg);
          return d;
        }
        const auto r = solve_feasibility(build_feasibility_program(c, pool));
        d["feasible"] = r.feasible;
        if (r.witness) d["weights"] = to_py(weights_to_json(*r.witness, sg)["weights"]);
        return d;
      },
      py::arg("graph"), py::arg("paths"), py::arg("weights") = py::none(),
      "Coverage, retraction and geodesic feasibility of a path list. With "
      "weights (segment name -> \"p/q\"), checks those weights instead of solving.");

  m.def(
      "classify_two",
      [](const std::vector<std::vector<std::string>>& paths) {
        const PathSystem s = make_system(paths, 2);
        const auto o = compatible_orientation_two(s);
        py::dict d;
        d["compatible"] = o.has_value();
        if (o) {
          const auto metric = construct_metric_two(s, *o);
          d["reverse_second"] = o->second;
          d["weights"] = to_py(weights_to_json(metric.weights, metric.realized.subdivided)["weights"]);
        }
        return d;
      },
      py::arg("paths"));

  m.def(
      "classify_three",
      [](const std::vector<std::vector<std::string>>& paths) {
        const PathSystem s = make_system(paths, 3);
        const auto lp = check_admissible(s);
        py::dict d;
        d["verdict"] = to_string(classify_three(s));
        d["admissible"] = lp.feasible;
        if (lp.witness) d["weights"] = to_py(weights_to_json(*lp.witness, realize(s).subdivided)["weights"]);
        return d;
      },
      py::arg("paths"));

  m.def(
      "atlas",
      [](int group, bool variants) {
        std::vector<AtlasRow> rows;
        {
          py::gil_scoped_release nogil;
          rows = enumerate_group(group, variants);
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["config"] = r.config.name;
          d["variant"] = r.config.variant_name();
          py::list orders;
          for (const auto& o : r.config.orders) orders.append(format_order(o, r.config.identifications));
          d["orders"] = orders;
          d["admissible"] = r.admissible;
          d["verdict"] = to_string(r.verdict);
          out.append(d);
        }
        return out;
      },
      py::arg("group"), py::arg("variants") = true);

  m.def(
      "atlas_mismatches", [](int group) { return diff_expected(group, enumerate_group(group, true)); },
      py::arg("group"), "Rows whose admissibility differs from the reference lists.");

  m.def(
      "to_dot",
      [](const Multigraph& g, const py::object& paths, const py::object& weights, const std::string& title) {
        const SubdividedGraph sg = two_subdivision(g);
        std::vector<PathSeq> ps;
        if (!paths.is_none()) ps = parse_paths(paths, sg);
        std::optional<Weighting> w;
        if (!weights.is_none()) {
          Json doc;
          doc["weights"] = from_py(weights);
          w = parse_weights(doc.dump(), sg);
        }
        return to_dot(sg, ps, w, title);
      },
      py::arg("graph"), py::arg("paths") = py::none(), py::arg("weights") = py::none(), py::arg("title") = "G");
}
