#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "walkpart/digraph.hpp"
#include "walkpart/signature.hpp"
#include "walkpart/walk.hpp"

namespace walkpart {

using Matrix = Eigen::MatrixXcd;

// Digraph with a complex d_to x d_from matrix on every edge.
class WeightedDigraph {
 public:
  WeightedDigraph(Digraph g, std::vector<std::size_t> dims,
                  std::map<std::pair<Vertex, Vertex>, Matrix> weights);

  const Digraph& graph() const noexcept { return graph_; }
  std::size_t dim(Vertex v) const { return dims_.at(v); }
  // Weight of the edge from -> to.
  const Matrix& weight(Vertex from, Vertex to) const;

 private:
  Digraph graph_;
  std::vector<std::size_t> dims_;
  std::map<std::pair<Vertex, Vertex>, Matrix> weights_;
};

Matrix walk_weight(const WeightedDigraph& wg, const Walk& w);

Matrix dressed_vertex_weight(const WeightedDigraph& wg, Vertex alpha, const Signature& k);
Matrix dressed_cycle_weight(const WeightedDigraph& wg, const Walk& q, const Signature& k,
                            std::size_t l);
Matrix dressed_walk_weight(const WeightedDigraph& wg, const Walk& i, const Signature& k);

struct SumResult {
  Matrix value;
  std::size_t terms = 0;
};

SumResult resummed_walk_sum(const WeightedDigraph& wg, Vertex alpha, Vertex omega,
                            const Signature& k, std::size_t max_irreducible_len);

Matrix truncated_walk_sum(const WeightedDigraph& wg, Vertex alpha, Vertex omega,
                          std::size_t max_len);

// Block (omega, alpha) of (I - A)^{-1}, A holding w_{beta alpha} in block
// (beta, alpha).
Matrix resolvent_entry(const WeightedDigraph& wg, Vertex alpha, Vertex omega);

Matrix block_matrix(const WeightedDigraph& wg);
double spectral_radius(const WeightedDigraph& wg);

// Throws SingularMatrixError when the reciprocal condition estimate of m is
// below 1e-12.
Matrix checked_inverse(const Matrix& m);

}  // namespace walkpart
