#pragma once

// Brute-force oracles and graph fixtures shared by the unit and acceptance
// tests. Nothing here calls the enumeration or dressing code under test.

#include <algorithm>
#include <complex>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "walkpart/digraph.hpp"
#include "walkpart/notation.hpp"
#include "walkpart/walk.hpp"
#include "walkpart/walksum.hpp"

namespace oracle {

using walkpart::Digraph;
using walkpart::Vertex;
using walkpart::Walk;

inline std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Bit (from * n + to) of mask selects edge from -> to.
inline Digraph from_mask(std::size_t n, unsigned long mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (mask >> (a * n + b) & 1UL) edges.emplace_back(a, b);
  return Digraph(numbered(n), edges);
}

inline Digraph complete(std::size_t n, bool loops) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (loops || a != b) edges.emplace_back(a, b);
  return Digraph(numbered(n), edges);
}

inline Digraph with_edges(std::size_t n, const std::vector<std::pair<int, int>>& one_based) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : one_based) edges.emplace_back(a - 1, b - 1);
  return Digraph(numbered(n), edges);
}

// Graph on vertices 1..9 holding every edge that the listed walks use.
inline Digraph traced(const std::vector<std::string>& walks) {
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const auto& w : walks)
    for (std::size_t i = 1; i < w.size(); ++i)
      edges.emplace(static_cast<Vertex>(w[i - 1] - '1'), static_cast<Vertex>(w[i] - '1'));
  return Digraph(numbered(9), {edges.begin(), edges.end()});
}

inline Walk W(const std::string& digits) {
  std::vector<Vertex> vs;
  for (char c : digits) vs.push_back(static_cast<Vertex>(c - '1'));
  return Walk(vs);
}

// Left-associated nesting of digit-string walks.
inline Walk chain(std::initializer_list<Walk> parts) {
  Walk acc;
  bool first = true;
  for (const Walk& p : parts) {
    acc = first ? p : walkpart::nest(acc, p);
    first = false;
  }
  return acc;
}

inline std::string S(const Walk& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (Vertex v : w.vertices()) out += static_cast<char>('1' + v);
  return out;
}

// Every vertex sequence over the universe, odometer style, kept when each
// step is an edge.
inline std::vector<Walk> walks_by_odometer(const Digraph& g, Vertex a, Vertex b,
                                           std::size_t max_len) {
  std::vector<Walk> out;
  const auto vs = g.vertices();
  if (!g.contains(a) || !g.contains(b)) return out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> digit(len + 1, 0);
    std::size_t combos = 1;
    for (std::size_t i = 0; i + 1 < len; ++i) combos *= vs.size();
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t x = c;
      std::vector<Vertex> seq{a};
      for (std::size_t i = 0; i + 1 < len; ++i) {
        seq.push_back(vs[x % vs.size()]);
        x /= vs.size();
      }
      if (len > 0) seq.push_back(b);
      if (len == 0 && a != b) continue;
      bool ok = true;
      for (std::size_t i = 1; i < seq.size() && ok; ++i) ok = g.has_edge(seq[i - 1], seq[i]);
      if (ok) out.emplace_back(seq);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool revisits_head(const Walk& c) {
  const auto& s = c.vertices();
  return std::find(s.begin() + 1, s.end() - 1, s.front()) != s.end() - 1;
}

// Cycles off a: nontrivial closed walks that never pass through a in between.
inline std::vector<Walk> cycles_by_odometer(const Digraph& g, Vertex a, std::size_t max_len) {
  std::vector<Walk> out;
  for (auto& w : walks_by_odometer(g, a, a, max_len))
    if (!w.is_trivial() && !revisits_head(w)) out.push_back(w);
  return out;
}

inline bool all_distinct(const std::vector<Vertex>& v) {
  std::set<Vertex> s(v.begin(), v.end());
  return s.size() == v.size();
}

// Number of walks of length exactly n from a to b, by 0/1 adjacency powers.
inline std::size_t adjacency_count(const Digraph& g, Vertex a, Vertex b, std::size_t n) {
  const std::size_t u = g.universe_size();
  std::vector<std::size_t> vec(u, 0);
  vec[a] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::size_t> next(u, 0);
    for (auto [x, y] : g.edges()) next[y] += vec[x];
    vec = next;
  }
  return vec[b];
}

struct RandomGraphs {
  std::mt19937_64 rng;
  explicit RandomGraphs(std::uint64_t seed) : rng(seed) {}

  Digraph digraph(std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (coin(rng)) edges.emplace_back(a, b);
    return Digraph(numbered(n), edges);
  }

  walkpart::Matrix matrix(std::size_t rows, std::size_t cols, bool complex_entries) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    walkpart::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = {u(rng), complex_entries ? u(rng) : 0.0};
    return m;
  }

  // Random weights with the block matrix rescaled to spectral radius rho.
  walkpart::WeightedDigraph weighted(const Digraph& g, const std::vector<std::size_t>& dims,
                                     bool complex_entries, double rho) {
    std::map<std::pair<Vertex, Vertex>, walkpart::Matrix> ws;
    for (auto [a, b] : g.edges()) ws.emplace(std::make_pair(a, b), matrix(dims[b], dims[a], complex_entries));
    walkpart::WeightedDigraph raw(g, dims, ws);
    const double r = walkpart::spectral_radius(raw);
    if (r > 0)
      for (auto& [e, w] : ws) w *= rho / r;
    return walkpart::WeightedDigraph(g, dims, ws);
  }
};

inline walkpart::WeightedDigraph scalar_weights(const Digraph& g,
                                                const std::map<std::pair<int, int>, std::complex<double>>& w) {
  std::map<std::pair<Vertex, Vertex>, walkpart::Matrix> ws;
  for (auto [e, x] : w) {
    walkpart::Matrix m(1, 1);
    m(0, 0) = x;
    ws.emplace(std::make_pair(static_cast<Vertex>(e.first - 1), static_cast<Vertex>(e.second - 1)), m);
  }
  return walkpart::WeightedDigraph(g, std::vector<std::size_t>(g.universe_size(), 1), ws);
}

inline double rel_err(const walkpart::Matrix& got, const walkpart::Matrix& want) {
  const double scale = std::max(want.norm(), 1e-300);
  return (got - want).norm() / scale;
}

// sum_{n <= L} A^n, block (b, a); independent of the per-vertex recursion.
inline walkpart::Matrix power_series_block(const walkpart::WeightedDigraph& wg, Vertex a, Vertex b,
                                           std::size_t max_len) {
  const walkpart::Matrix A = walkpart::block_matrix(wg);
  std::vector<Eigen::Index> off(wg.graph().universe_size(), 0);
  Eigen::Index at = 0;
  for (Vertex v : wg.graph().vertices()) {
    off[v] = at;
    at += static_cast<Eigen::Index>(wg.dim(v));
  }
  walkpart::Matrix term = walkpart::Matrix::Identity(A.rows(), A.cols());
  walkpart::Matrix sum = term;
  for (std::size_t n = 1; n <= max_len; ++n) {
    term = A * term;
    sum += term;
  }
  return sum.block(off[b], off[a], static_cast<Eigen::Index>(wg.dim(b)),
                   static_cast<Eigen::Index>(wg.dim(a)));
}

}  // namespace oracle
