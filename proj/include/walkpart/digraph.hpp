#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "walkpart/core.hpp"
#include "walkpart/walk.hpp"

namespace walkpart {

// Finite digraph over a fixed label universe. Deleting vertices keeps the
// universe, so walks on a subgraph are walks on the parent graph too.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<std::string> labels,
          const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t universe_size() const noexcept { return universe_ ? universe_->labels.size() : 0; }
  std::size_t vertex_count() const noexcept { return count_; }
  std::vector<Vertex> vertices() const;
  bool contains(Vertex v) const noexcept { return v < active_.size() && active_[v]; }
  const std::vector<bool>& active() const noexcept { return active_; }

  const std::string& label(Vertex v) const;
  std::optional<Vertex> find(std::string_view label) const;
  Vertex index_of(std::string_view label) const;

  bool has_edge(Vertex from, Vertex to) const noexcept;
  const std::vector<Vertex>& successors(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Digraph remove_vertices(std::span<const Vertex> vs) const;
  Digraph remove_vertices(const std::vector<std::string>& labels) const;

  // Checks that consecutive vertices of w are joined by edges and that every
  // vertex is present.
  bool admits(const Walk& w) const;

 private:
  struct Universe {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
  };

  std::shared_ptr<const Universe> universe_;
  std::vector<bool> active_;
  std::size_t count_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<bool> adj_;
};

// Simple cycles off alpha of length exactly len, lexicographic order.
std::vector<Walk> simple_cycles_at(const Digraph& g, Vertex alpha, std::size_t len);

// Simple cycles off alpha of length at most max_len, ordered by length, then
// lexicographically.
std::vector<Walk> simple_cycles_upto(const Digraph& g, Vertex alpha, std::size_t max_len);

std::vector<Walk> simple_paths(const Digraph& g, Vertex alpha, Vertex omega);

}  // namespace walkpart
