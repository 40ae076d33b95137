#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walkpart/dressing.hpp"
#include "walkpart/enumeration.hpp"
#include "walkpart/graph_io.hpp"
#include "walkpart/notation.hpp"
#include "walkpart/reduction.hpp"
#include "walkpart/signature.hpp"
#include "walkpart/walksum.hpp"

namespace py = pybind11;
using namespace walkpart;

namespace {

using LabelEdge = std::pair<std::string, std::string>;

Digraph make_graph(std::vector<std::string> labels, const std::vector<LabelEdge>& edges) {
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<Vertex>(i));
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) throw DomainError("edge " + a + "->" + b + " has an unknown end");
    es.emplace_back(ia->second, ib->second);
  }
  return Digraph(std::move(labels), es);
}

Walk walk_on(const Digraph& g, const std::string& text) {
  Walk w = parse_walk(text, g);
  if (!w.is_zero() && !g.admits(w)) throw DomainError("'" + text + "' is not a walk on the graph");
  return w;
}

std::vector<std::string> texts(const std::vector<Walk>& ws, const Digraph& g) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const Walk& w : ws) out.push_back(format_walk(w, g));
  return out;
}

WeightedDigraph make_weighted(const Digraph& g, const std::map<std::string, std::size_t>& dims,
                              const std::map<LabelEdge, Matrix>& weights) {
  std::vector<std::size_t> d(g.universe_size(), 1);
  for (const auto& [label, n] : dims) d[g.index_of(label)] = n;
  std::map<std::pair<Vertex, Vertex>, Matrix> ws;
  for (const auto& [e, m] : weights) ws.emplace(std::make_pair(g.index_of(e.first), g.index_of(e.second)), m);
  return WeightedDigraph(g, std::move(d), std::move(ws));
}

}  // namespace

PYBIND11_MODULE(_walkpart, m) {
  m.doc() = "Walk factorization, reduction, dressing and resummed walk sums";

  static py::exception<SingularMatrixError> singular(m, "SingularMatrixError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SingularMatrixError& e) {
      py::set_error(singular, e.what());
    } catch (const DomainError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_graph), py::arg("labels"), py::arg("edges"))
      .def_static("load", [](const std::string& path) { return load_graph(path).graph; })
      .def("vertices", [](const Digraph& g) {
        std::vector<std::string> out;
        for (Vertex v : g.vertices()) out.push_back(g.label(v));
        return out;
      })
      .def("edges", [](const Digraph& g) {
        std::vector<LabelEdge> out;
        for (auto [a, b] : g.edges()) out.emplace_back(g.label(a), g.label(b));
        return out;
      })
      .def("has_edge", [](const Digraph& g, const std::string& a, const std::string& b) {
        return g.has_edge(g.index_of(a), g.index_of(b));
      })
      .def("remove_vertices",
           [](const Digraph& g, const std::vector<std::string>& labels) { return g.remove_vertices(labels); })
      .def("admits", [](const Digraph& g, const std::string& w) {
        const Walk x = parse_walk(w, g);
        return !x.is_zero() && g.admits(x);
      });

  m.def("nest", [](const Digraph& g, const std::string& a, const std::string& b) {
    return format_walk(nest(parse_walk(a, g), parse_walk(b, g)), g);
  });
  m.def("factor", [](const Digraph& g, const std::string& w) {
    return format_tree(prime_factorize(walk_on(g, w)), g);
  });
  m.def("factor_json", [](const Digraph& g, const std::string& w) {
    return tree_to_json(prime_factorize(walk_on(g, w)), g).dump();
  });
  m.def("kmax", [](const Digraph& g) { return kmax(g).to_string(); });
  m.def(
      "reduce",
      [](const Digraph& g, const std::string& w, const std::string& k, std::optional<std::size_t> level) {
        const Walk x = walk_on(g, w);
        const Signature s = Signature::parse(k);
        return format_walk(level ? cycle_reduce(x, s, *level) : walk_reduce(x, s), g);
      },
      py::arg("graph"), py::arg("walk"), py::arg("signature"), py::arg("level") = py::none());
  m.def("is_irreducible", [](const Digraph& g, const std::string& w, const std::string& k) {
    return is_irreducible(walk_on(g, w), Signature::parse(k));
  });
  m.def("all_walks", [](const Digraph& g, const std::string& a, const std::string& b, std::size_t max_len) {
    return texts(all_walks(g, g.index_of(a), g.index_of(b), max_len), g);
  });
  m.def("irreducible_walks", [](const Digraph& g, const std::string& a, const std::string& b,
                                const std::string& k, std::size_t max_len) {
    return texts(irreducible_walks(g, g.index_of(a), g.index_of(b), Signature::parse(k), max_len), g);
  });
  m.def(
      "irreducible_cycles",
      [](const Digraph& g, const std::string& a, const std::string& k, std::size_t level, std::size_t max_len) {
        return texts(irreducible_cycles(g, g.index_of(a), Signature::parse(k), level, max_len), g);
      },
      py::arg("graph"), py::arg("vertex"), py::arg("signature"), py::arg("level"), py::arg("max_len"));
  m.def(
      "dress",
      [](const Digraph& g, const std::string& w, const std::string& k, std::size_t max_len,
         std::optional<std::size_t> level) {
        const Walk x = walk_on(g, w);
        const Signature s = Signature::parse(k);
        return texts(level ? cycle_dress(x, s, *level, g, max_len) : walk_dress(x, s, g, max_len), g);
      },
      py::arg("graph"), py::arg("walk"), py::arg("signature"), py::arg("max_len"),
      py::arg("level") = py::none());
  m.def("partition_check", [](const Digraph& g, const std::string& k, std::size_t max_len) {
    const auto r = partition_check(g, Signature::parse(k), max_len);
    py::dict d;
    d["walk_count"] = r.walk_count;
    d["class_count"] = r.class_count;
    d["violations"] = r.violations;
    return d;
  });

  py::class_<WeightedDigraph>(m, "WeightedDigraph")
      .def(py::init(&make_weighted), py::arg("graph"), py::arg("dims"), py::arg("weights"))
      .def_static("load", [](const std::string& path) { return load_graph(path).weighted(); })
      .def_property_readonly("graph", &WeightedDigraph::graph)
      .def("block_matrix", [](const WeightedDigraph& wg) { return block_matrix(wg); })
      .def("spectral_radius", [](const WeightedDigraph& wg) { return spectral_radius(wg); });

  m.def("walk_weight", [](const WeightedDigraph& wg, const std::string& w) {
    return walk_weight(wg, walk_on(wg.graph(), w));
  });
  m.def("dressed_vertex_weight", [](const WeightedDigraph& wg, const std::string& a, const std::string& k) {
    return dressed_vertex_weight(wg, wg.graph().index_of(a), Signature::parse(k));
  });
  m.def("dressed_walk_weight", [](const WeightedDigraph& wg, const std::string& w, const std::string& k) {
    return dressed_walk_weight(wg, walk_on(wg.graph(), w), Signature::parse(k));
  });
  m.def(
      "resummed_walk_sum",
      [](const WeightedDigraph& wg, const std::string& a, const std::string& b, const std::string& k,
         std::size_t max_len) {
        const auto r = resummed_walk_sum(wg, wg.graph().index_of(a), wg.graph().index_of(b),
                                         Signature::parse(k), max_len);
        return py::make_tuple(r.value, r.terms);
      },
      py::arg("weighted"), py::arg("source"), py::arg("target"), py::arg("signature"),
      py::arg("max_len") = 0);
  m.def("truncated_walk_sum",
        [](const WeightedDigraph& wg, const std::string& a, const std::string& b, std::size_t max_len) {
          return truncated_walk_sum(wg, wg.graph().index_of(a), wg.graph().index_of(b), max_len);
        });
  m.def("resolvent_entry", [](const WeightedDigraph& wg, const std::string& a, const std::string& b) {
    return resolvent_entry(wg, wg.graph().index_of(a), wg.graph().index_of(b));
  });
}
