#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unssp/complete_set.hpp"
#include "unssp/enumeration.hpp"
#include "unssp/errors.hpp"
#include "unssp/instances.hpp"
#include "unssp/json_io.hpp"
#include "unssp/lp_export.hpp"
#include "unssp/solvers.hpp"

namespace py = pybind11;
using namespace unssp;

namespace {

py::dict path_dict(const Graph& g, const Path& p, Value value) {
  py::dict d;
  d["vertices"] = path_vertices(g, p);
  d["arc_ids"] = p.arcs;
  d["value"] = value;
  return d;
}

py::object maybe_path(const Graph& g, const std::optional<EmittedPath>& e) {
  if (!e) return py::none();
  return path_dict(g, e->path, e->value);
}

Rational rational_arg(const py::object& o) {
  if (py::isinstance<py::int_>(o)) return parse_rational(std::to_string(o.cast<long long>()));
  return parse_rational(o.cast<std::string>());
}

py::dict stats_dict(const RunStats& s) {
  py::dict d;
  d["paths"] = s.paths;
  d["uspp_solves"] = s.uspp_solves;
  d["failed_solves"] = s.failed_solves;
  d["arcs_scanned"] = s.arcs_scanned;
  d["backtracks"] = s.backtracks;
  d["truncated"] = s.truncated;
  d["f_star"] = s.f_star ? py::object(py::int_(*s.f_star)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_unssp, m) {
  m.doc() = "Universal near-shortest simple paths";

  static py::exception<Error> base(m, "UnsspError");
  static py::exception<ParseError> parse_exc(m, "GraphParseError", base.ptr());
  static py::exception<SizeGateError> gate_exc(m, "SizeGateError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const SizeGateError& e) {
      py::set_error(gate_exc, e.what());
    } catch (const ValidationError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const OverflowError& e) {
      py::set_error(PyExc_OverflowError, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](Vertex n, const std::vector<std::tuple<Vertex, Vertex, Cost>>& arcs,
                       Vertex source, Vertex sink) {
             std::vector<Arc> list;
             for (const auto& [u, v, c] : arcs) list.push_back({u, v, c});
             return Graph(n, std::move(list), source, sink);
           }),
           py::arg("n"), py::arg("arcs"), py::arg("source"), py::arg("sink"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("read", &read_graph_file)
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_arcs", &Graph::num_arcs)
      .def_property_readonly("source", &Graph::source)
      .def_property_readonly("sink", &Graph::sink)
      .def_property_readonly("arcs",
                             [](const Graph& g) {
                               std::vector<std::tuple<Vertex, Vertex, Cost>> out;
                               for (const Arc& a : g.arcs()) out.emplace_back(a.tail, a.head, a.cost);
                               return out;
                             })
      .def("to_text", &serialize_graph)
      .def("inverse", &inverse)
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_arcs()) + ")";
      });

  m.def("universal_value",
        [](const Graph& g, const std::vector<ArcId>& arcs, const std::string& lam) {
          const Path p{g.source(), arcs};
          if (!is_walk(g, p)) throw ValidationError("arc ids do not form a walk from the source");
          return universal_value(g, p, parse_lambda(lam, g.num_vertices()));
        },
        py::arg("graph"), py::arg("arc_ids"), py::arg("lam"));

  m.def("solve",
        [](const Graph& g, const std::string& lam) -> py::object {
          ArcMask none(g);
          const auto r = solve(g, none, g.source(), g.sink(), parse_lambda(lam, g.num_vertices()));
          if (!r.found()) return py::none();
          return path_dict(g, *r.path, *r.value);
        },
        py::arg("graph"), py::arg("lam") = "sum");

  m.def("enumerate_paths",
        [](const Graph& g, const std::string& lam, const py::object& eps,
           const std::string& algorithm, std::uint64_t max_paths, bool sum_fast_path) {
          EnumerationOptions opt;
          opt.sum_fast_path = sum_fast_path;
          py::list paths;
          PathSink sink([&](const Path& p, Value v) { paths.append(path_dict(g, p, v)); }, max_paths);
          const RunStats st = enumerate(parse_algorithm(algorithm), g,
                                        parse_lambda(lam, g.num_vertices()), rational_arg(eps), sink, opt);
          return py::make_tuple(paths, stats_dict(st));
        },
        py::arg("graph"), py::arg("lam") = "sum", py::arg("eps") = "0",
        py::arg("algorithm") = "alg2", py::arg("max_paths") = kDefaultMaxPaths,
        py::arg("sum_fast_path") = false);

  m.def("minimal_complete_set",
        [](const Graph& g, const std::string& lam, const py::object& eps) {
          py::list out;
          for (const auto& e : minimal_complete_set(g, parse_lambda(lam, g.num_vertices()),
                                                    rational_arg(eps)).entries) {
            out.append(path_dict(g, e.path, e.value));
          }
          return out;
        },
        py::arg("graph"), py::arg("lam") = "sum", py::arg("eps") = "0");

  m.def("representatives",
        [](const Graph& g, const std::string& lam, const py::object& eps, const py::object& delta) {
          const auto reps = representatives(g, parse_lambda(lam, g.num_vertices()),
                                            rational_arg(eps), rational_arg(delta));
          py::list out;
          for (std::size_t i = 0; i < reps.witnesses.size(); ++i) {
            const Interval& iv = reps.partition.intervals[i];
            py::dict d;
            d["lo"] = rational_string(iv.lo);
            d["hi"] = rational_string(iv.hi);
            d["closed"] = iv.closed;
            d["witness"] = maybe_path(g, reps.witnesses[i]);
            out.append(d);
          }
          return out;
        },
        py::arg("graph"), py::arg("lam"), py::arg("eps"), py::arg("delta"));

  m.def("interval_partition",
        [](Value u, const py::object& eps, const py::object& delta) {
          py::list out;
          for (const auto& iv : interval_partition(u, rational_arg(eps), rational_arg(delta)).intervals) {
            out.append(py::make_tuple(rational_string(iv.lo), rational_string(iv.hi), iv.closed));
          }
          return out;
        },
        py::arg("u"), py::arg("eps"), py::arg("delta"));

  m.def("next_usp",
        [](const Graph& g, const std::string& lam, Value xi, std::optional<Value> psi) {
          return maybe_path(g, next_usp(g, {parse_lambda(lam, g.num_vertices()), xi, psi}));
        },
        py::arg("graph"), py::arg("lam"), py::arg("xi"), py::arg("psi") = py::none());

  m.def("next_usp_subsets",
        [](const Graph& g, int k, Value mu, Value psi) {
          const auto d = next_usp_theorem5(g, k, mu, psi);
          py::dict out;
          out["accepted"] = d.accepted;
          out["witness"] = maybe_path(g, d.witness);
          out["subsets_examined"] = d.subsets_examined;
          return out;
        },
        py::arg("graph"), py::arg("k"), py::arg("mu"), py::arg("psi"));

  m.def("emit_nspip", &emit_nspip, py::arg("graph"), py::arg("xi"));
  m.def("emit_unspip",
        [](const Graph& g, const std::string& lam, Value xi) {
          return emit_unspip(g, parse_lambda(lam, g.num_vertices()), xi);
        },
        py::arg("graph"), py::arg("lam"), py::arg("xi"));

  m.def("gen_triplet_chain", &gen_triplet_chain, py::arg("b"));
  m.def("gen_binary_doubling", &gen_binary_doubling, py::arg("n"));
  m.def("gen_random",
        [](int n, int m_arcs, Cost cost_max, std::uint64_t seed) {
          return gen_random(RandomSpec{n, m_arcs, cost_max, seed});
        },
        py::arg("n"), py::arg("m"), py::arg("cost_max") = 9, py::arg("seed") = 1);
}
