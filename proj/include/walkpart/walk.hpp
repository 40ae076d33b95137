#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "walkpart/core.hpp"

namespace walkpart {

// A walk is either the zero walk, a trivial walk (one vertex), or a vertex
// sequence of length >= 1. Vertices are indices into a Digraph.
class Walk {
 public:
  Walk() = default;  // zero walk
  explicit Walk(std::vector<Vertex> vertices);

  static Walk zero() { return Walk(); }
  static Walk trivial(Vertex v) { return Walk(std::vector<Vertex>{v}); }

  bool is_zero() const noexcept { return seq_.empty(); }
  bool is_trivial() const noexcept { return seq_.size() == 1; }
  std::size_t length() const;
  Vertex head() const;
  Vertex tail() const;
  bool is_closed() const;
  const std::vector<Vertex>& vertices() const noexcept { return seq_; }

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;

 private:
  std::vector<Vertex> seq_;
};

struct WalkHash {
  std::size_t operator()(const Walk& w) const noexcept;
};

struct WalkClass {
  bool is_closed = false;
  bool is_cycle = false;
  bool is_simple_cycle = false;
  bool is_simple_path = false;
};

WalkClass classify(const Walk& w);

bool nestable(const Walk& w1, const Walk& w2);

// Splices w2 into the final appearance of head(w2) in w1. Zero when either
// argument is zero or the pair is not nestable.
Walk nest(const Walk& w1, const Walk& w2);

// Joins a walk ending at v with a walk starting at v.
Walk concatenate(const Walk& a, const Walk& b);

}  // namespace walkpart
