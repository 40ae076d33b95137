#include "walkpart/graph_io.hpp"

#include <fstream>

namespace walkpart {

namespace {

using nlohmann::json;

std::complex<double> entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw DomainError("weight entries are numbers or [re, im] pairs");
}

bool is_entry(const json& e) {
  return e.is_number() || (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number());
}

Matrix read_weight(const json& w) {
  if (is_entry(w)) {
    Matrix m(1, 1);
    m(0, 0) = entry(w);
    return m;
  }
  if (!w.is_array() || w.empty() || !w[0].is_array())
    throw DomainError("a weight is a scalar or a list of rows");
  const auto rows = static_cast<Eigen::Index>(w.size());
  const auto cols = static_cast<Eigen::Index>(w[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!w[r].is_array() || static_cast<Eigen::Index>(w[r].size()) != cols)
      throw DomainError("weight rows differ in length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = entry(w[r][c]);
  }
  return m;
}

}  // namespace

WeightedDigraph GraphDocument::weighted() const {
  std::map<std::pair<Vertex, Vertex>, Matrix> ws;
  for (const auto& [edge, w] : weights) {
    if (!w) {
      throw DomainError("edge " + graph.label(edge.first) + "->" + graph.label(edge.second) +
                        " has no weight");
    }
    ws.emplace(edge, *w);
  }
  return WeightedDigraph(graph, dims, std::move(ws));
}

GraphDocument parse_graph(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices"))
    throw DomainError("graph document needs a \"vertices\" list");
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  for (const auto& v : doc.at("vertices")) {
    if (v.is_string() || v.is_number()) {
      labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      dims.push_back(1);
      continue;
    }
    const json& id = v.at("id");
    labels.push_back(id.is_string() ? id.get<std::string>() : id.dump());
    const long d = v.value("dim", 1L);
    if (d <= 0) throw DomainError("vertex dimensions must be positive");
    dims.push_back(static_cast<std::size_t>(d));
  }
  std::unordered_map<std::string, Vertex> index;
  for (Vertex i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  auto lookup = [&](const json& id) {
    const std::string s = id.is_string() ? id.get<std::string>() : id.dump();
    auto it = index.find(s);
    if (it == index.end()) throw DomainError("edge names unknown vertex '" + s + "'");
    return it->second;
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::map<std::pair<Vertex, Vertex>, std::optional<Matrix>> weights;
  if (doc.contains("edges")) {
    for (const auto& e : doc.at("edges")) {
      const Vertex from = lookup(e.at("from"));
      const Vertex to = lookup(e.at("to"));
      edges.emplace_back(from, to);
      std::optional<Matrix> w;
      if (e.contains("weight")) w = read_weight(e.at("weight"));
      weights[{from, to}] = std::move(w);
    }
  }
  GraphDocument out{Digraph(std::move(labels), edges), std::move(dims), std::move(weights)};
  return out;
}

GraphDocument load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open graph file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw DomainError("graph file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_graph(doc);
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"shape", {m.rows(), m.cols()}}, {"entries", entries}};
}

}  // namespace walkpart
