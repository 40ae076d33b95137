#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "walkpart/digraph.hpp"
#include "walkpart/walksum.hpp"

namespace walkpart {

struct GraphDocument {
  Digraph graph;
  std::vector<std::size_t> dims;
  std::map<std::pair<Vertex, Vertex>, std::optional<Matrix>> weights;

  // Errors if an edge lacks a weight.
  WeightedDigraph weighted() const;
};

// {"vertices":[{"id":"1","dim":1}], "edges":[{"from":"1","to":"2","weight":w}]}
// A weight is a scalar or a list of rows; an entry is a number or [re, im].
GraphDocument parse_graph(const nlohmann::json& doc);
GraphDocument load_graph(const std::string& path);

nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace walkpart
