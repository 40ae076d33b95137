#include "walkpart/walksum.hpp"

#include <cstdint>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "walkpart/enumeration.hpp"
#include "walkpart/reduction.hpp"
#include "walkpart/syntax_tree.hpp"

namespace walkpart {

WeightedDigraph::WeightedDigraph(Digraph g, std::vector<std::size_t> dims,
                                 std::map<std::pair<Vertex, Vertex>, Matrix> weights)
    : graph_(std::move(g)), dims_(std::move(dims)), weights_(std::move(weights)) {
  if (dims_.size() != graph_.universe_size()) throw DomainError("one dimension per vertex needed");
  for (std::size_t d : dims_)
    if (d == 0) throw DomainError("vertex dimensions must be positive");
  for (auto [from, to] : graph_.edges()) {
    auto it = weights_.find({from, to});
    const std::string name = graph_.label(from) + "->" + graph_.label(to);
    if (it == weights_.end()) throw DomainError("edge " + name + " has no weight");
    if (static_cast<std::size_t>(it->second.rows()) != dims_[to] ||
        static_cast<std::size_t>(it->second.cols()) != dims_[from])
      throw DomainError("weight of edge " + name + " has the wrong shape");
  }
  for (const auto& [edge, w] : weights_)
    if (!graph_.has_edge(edge.first, edge.second))
      throw DomainError("weight given for a missing edge");
}

const Matrix& WeightedDigraph::weight(Vertex from, Vertex to) const {
  auto it = weights_.find({from, to});
  if (it == weights_.end() || !graph_.has_edge(from, to))
    throw DomainError("no edge " + graph_.label(from) + "->" + graph_.label(to));
  return it->second;
}

Matrix checked_inverse(const Matrix& m) {
  Eigen::PartialPivLU<Matrix> lu(m);
  const double rc = lu.rcond();
  if (!(rc >= 1e-12)) throw SingularMatrixError("matrix is numerically singular");
  return lu.solve(Matrix::Identity(m.rows(), m.cols()));
}

Matrix walk_weight(const WeightedDigraph& wg, const Walk& w) {
  if (w.is_zero()) throw DomainError("the zero walk has no weight");
  const auto& s = w.vertices();
  Matrix p = Matrix::Identity(wg.dim(s.front()), wg.dim(s.front()));
  for (std::size_t i = 1; i < s.size(); ++i) p = wg.weight(s[i - 1], s[i]) * p;
  return p;
}

namespace {

class WeightEngine {
 public:
  WeightEngine(const WeightedDigraph& wg, Signature k) : wg_(wg), k_(std::move(k)) {}

  // Weight of the vertex a dressed with [k_level, ..., 0]-structured cycles on g.
  const Matrix& vertex(const Digraph& g, Vertex a, std::size_t level) {
    auto key = std::make_tuple(g.active(), a, level);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto d = static_cast<Eigen::Index>(wg_.dim(a));
    Matrix result = Matrix::Identity(d, d);
    if (level < k_.depth()) {
      Matrix sum = Matrix::Zero(d, d);
      for (const Walk& c : simple_cycles_upto(g, a, k_[level])) {
        const auto& s = c.vertices();
        Matrix p = wg_.weight(s[0], s[1]);
        Digraph sub = g;
        for (std::size_t i = 1; i + 1 < s.size(); ++i) {
          sub = sub.remove_vertices(std::span<const Vertex>(&s[i - 1], 1));
          p = vertex(sub, s[i], level + 1) * p;
          p = wg_.weight(s[i], s[i + 1]) * p;
        }
        sum += p;
      }
      try {
        result = checked_inverse(Matrix::Identity(d, d) - sum);
      } catch (const SingularMatrixError&) {
        throw SingularMatrixError("singular inner matrix dressing vertex '" + g.label(a) +
                                  "' with signature " + k_.suffix(level).to_string());
      }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  Matrix cycle(const Digraph& g, const SyntaxTree& node, std::size_t l) {
    const auto& base = node.root.vertices();
    const bool short_base = node.root.length() <= k_[l];
    const auto hedges = hedges_by_position(node);
    Matrix p = wg_.weight(base[0], base[1]);
    Digraph sub = g;
    for (std::size_t i = 1; i + 1 < base.size(); ++i) {
      sub = sub.remove_vertices(std::span<const Vertex>(&base[i - 1], 1));
      if (!hedges[i]) {
        p = vertex(sub, base[i], short_base ? l + 1 : 0) * p;
      } else {
        p = hedge(sub, base[i], *hedges[i], short_base ? l + 1 : 0) * p;
      }
      p = wg_.weight(base[i], base[i + 1]) * p;
    }
    return p;
  }

  Matrix walk(const Digraph& g, const SyntaxTree& t) {
    const auto& base = t.root.vertices();
    const auto hedges = hedges_by_position(t);
    const auto d = static_cast<Eigen::Index>(wg_.dim(base[0]));
    Matrix p = Matrix::Identity(d, d);
    Digraph sub = g;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (i) {
        p = wg_.weight(base[i - 1], base[i]) * p;
        sub = sub.remove_vertices(std::span<const Vertex>(&base[i - 1], 1));
      }
      p = (hedges[i] ? hedge(sub, base[i], *hedges[i], 0) : vertex(sub, base[i], 0)) * p;
    }
    return p;
  }

 private:
  Matrix hedge(const Digraph& g, Vertex mu, const Hedge& h, std::size_t first_level) {
    const auto d = static_cast<Eigen::Index>(wg_.dim(mu));
    Matrix p = Matrix::Identity(d, d);
    for (std::size_t j = 0; j < h.size(); ++j) {
      const std::size_t lj = j == 0 ? first_level : 0;
      p = vertex(g, mu, lj) * p;
      p = cycle(g, h[j], lj) * p;
    }
    return vertex(g, mu, 0) * p;
  }

  const WeightedDigraph& wg_;
  Signature k_;
  std::map<std::tuple<std::vector<bool>, Vertex, std::size_t>, Matrix> memo_;
};

}  // namespace

Matrix dressed_vertex_weight(const WeightedDigraph& wg, Vertex alpha, const Signature& k) {
  if (!wg.graph().contains(alpha)) throw DomainError("vertex is not in the graph");
  WeightEngine e(wg, k);
  return e.vertex(wg.graph(), alpha, 0);
}

Matrix dressed_cycle_weight(const WeightedDigraph& wg, const Walk& q, const Signature& k,
                            std::size_t l) {
  if (!wg.graph().admits(q)) throw DomainError("cycle is not a walk on the graph");
  if (!classify(q).is_cycle || cycle_reduce(q, k, l) != q)
    throw DomainError("cycle is not irreducible at this level");
  WeightEngine e(wg, k);
  return e.cycle(wg.graph(), factor_cycle(q), l);
}

Matrix dressed_walk_weight(const WeightedDigraph& wg, const Walk& i, const Signature& k) {
  if (!wg.graph().admits(i)) throw DomainError("walk is not a walk on the graph");
  if (!is_irreducible(i, k)) throw DomainError("walk is not irreducible");
  WeightEngine e(wg, k);
  return e.walk(wg.graph(), prime_factorize(i));
}

namespace {

// Sums graded by irreducible length: entry n holds the dressed weight of all
// irreducible pieces of length n, together with how many there are.
struct Graded {
  std::vector<Matrix> w;
  std::vector<std::uint64_t> n;
};

Graded zero_graded(Eigen::Index rows, Eigen::Index cols, std::size_t max_len) {
  return {std::vector<Matrix>(max_len + 1, Matrix::Zero(rows, cols)),
          std::vector<std::uint64_t>(max_len + 1, 0)};
}

Graded constant(const Matrix& m, std::size_t max_len) {
  Graded g = zero_graded(m.rows(), m.cols(), max_len);
  g.w[0] = m;
  g.n[0] = 1;
  return g;
}

// a applied after b.
Graded compose(const Graded& a, const Graded& b) {
  const std::size_t top = a.w.size() - 1;
  Graded out = zero_graded(a.w[0].rows(), b.w[0].cols(), top);
  for (std::size_t i = 0; i <= top; ++i) {
    if (a.n[i] == 0) continue;
    for (std::size_t j = 0; i + j <= top; ++j) {
      if (b.n[j] == 0) continue;
      out.w[i + j].noalias() += a.w[i] * b.w[j];
      out.n[i + j] += a.n[i] * b.n[j];
    }
  }
  return out;
}

// Edge weight as a piece of length one.
Graded edge_step(const Matrix& m, std::size_t max_len) {
  Graded g = zero_graded(m.rows(), m.cols(), max_len);
  if (max_len >= 1) {
    g.w[1] = m;
    g.n[1] = 1;
  }
  return g;
}

class GradedEngine {
 public:
  GradedEngine(const WeightedDigraph& wg, const Signature& k, std::size_t max_len)
      : wg_(wg), k_(k), max_len_(max_len), weights_(wg, k) {}

  // Dressed star of (K, 0)-irreducible cycles off a.
  const Graded& star(const Digraph& g, Vertex a) {
    auto key = std::make_tuple(g.active(), a, std::size_t{0});
    if (auto it = stars_.find(key); it != stars_.end()) return it->second;
    const Matrix& v0 = weights_.vertex(g, a, 0);
    const Graded step = compose(cycles(g, a, 0), constant(v0, max_len_));
    const auto d = static_cast<Eigen::Index>(wg_.dim(a));
    Graded acc = constant(Matrix::Identity(d, d), max_len_);
    for (std::size_t n = 1; n <= max_len_; ++n)
      for (std::size_t m = 1; m <= n; ++m) {
        if (step.n[m] == 0 || acc.n[n - m] == 0) continue;
        acc.w[n].noalias() += step.w[m] * acc.w[n - m];
        acc.n[n] += step.n[m] * acc.n[n - m];
      }
    Graded out = compose(constant(v0, max_len_), acc);
    return stars_.emplace(std::move(key), std::move(out)).first->second;
  }

  // Dressed weights of the (K, level)-irreducible cycles off a.
  const Graded& cycles(const Digraph& g, Vertex a, std::size_t level) {
    auto key = std::make_tuple(g.active(), a, level);
    if (auto it = cycles_.find(key); it != cycles_.end()) return it->second;
    const auto d = static_cast<Eigen::Index>(wg_.dim(a));
    Graded out = zero_graded(d, d, max_len_);
    for (const Walk& c : simple_cycles_upto(g, a, max_len_)) {
      const auto& s = c.vertices();
      const bool short_base = c.length() <= k_[level];
      Graded full = edge_step(wg_.weight(s[0], s[1]), max_len_);
      Graded bare = full;
      Digraph sub = g;
      for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        sub = sub.remove_vertices(std::span<const Vertex>(&s[i - 1], 1));
        const Graded next = edge_step(wg_.weight(s[i], s[i + 1]), max_len_);
        if (!short_base) {
          full = compose(next, compose(star(sub, s[i]), full));
          continue;
        }
        const Graded vl = constant(weights_.vertex(sub, s[i], level + 1), max_len_);
        Graded block = compose(star(sub, s[i]), compose(cycles(sub, s[i], level + 1), vl));
        for (std::size_t n = 0; n <= max_len_; ++n) {
          block.w[n] += vl.w[n];
          block.n[n] += vl.n[n];
        }
        full = compose(next, compose(block, full));
        bare = compose(next, compose(vl, bare));
      }
      for (std::size_t n = 0; n <= max_len_; ++n) {
        out.w[n] += full.w[n];
        out.n[n] += full.n[n];
        if (short_base) {
          out.w[n] -= bare.w[n];
          out.n[n] -= bare.n[n];
        }
      }
    }
    return cycles_.emplace(std::move(key), std::move(out)).first->second;
  }

  Graded walks(Vertex alpha, Vertex omega) {
    const Digraph& g = wg_.graph();
    Graded out = zero_graded(wg_.dim(omega), wg_.dim(alpha), max_len_);
    for (const Walk& p : simple_paths(g, alpha, omega)) {
      if (p.length() > max_len_) continue;
      const auto& s = p.vertices();
      Graded acc = star(g, s[0]);
      Digraph sub = g;
      for (std::size_t i = 1; i < s.size(); ++i) {
        sub = sub.remove_vertices(std::span<const Vertex>(&s[i - 1], 1));
        acc = compose(star(sub, s[i]), compose(edge_step(wg_.weight(s[i - 1], s[i]), max_len_), acc));
      }
      for (std::size_t n = 0; n <= max_len_; ++n) {
        out.w[n] += acc.w[n];
        out.n[n] += acc.n[n];
      }
    }
    return out;
  }

 private:
  using Key = std::tuple<std::vector<bool>, Vertex, std::size_t>;

  const WeightedDigraph& wg_;
  const Signature& k_;
  std::size_t max_len_;
  WeightEngine weights_;
  std::map<Key, Graded> stars_, cycles_;
};

}  // namespace

SumResult resummed_walk_sum(const WeightedDigraph& wg, Vertex alpha, Vertex omega,
                            const Signature& k, std::size_t max_irreducible_len) {
  const Digraph& g = wg.graph();
  if (!g.contains(alpha) || !g.contains(omega)) throw DomainError("vertex is not in the graph");
  // Under kmax every irreducible walk is a simple path.
  const std::size_t max_len =
      dominates(k, kmax(g)) ? g.vertices().size() : max_irreducible_len;
  GradedEngine e(wg, k, max_len);
  const Graded sums = e.walks(alpha, omega);
  SumResult r{Matrix::Zero(wg.dim(omega), wg.dim(alpha)), 0};
  for (std::size_t n = 0; n <= max_len; ++n) {
    r.value += sums.w[n];
    r.terms += sums.n[n];
  }
  return r;
}

Matrix truncated_walk_sum(const WeightedDigraph& wg, Vertex alpha, Vertex omega,
                          std::size_t max_len) {
  const Digraph& g = wg.graph();
  if (!g.contains(alpha) || !g.contains(omega)) throw DomainError("vertex is not in the graph");
  const auto da = static_cast<Eigen::Index>(wg.dim(alpha));
  // Per end vertex: the summed weight of the walks of the current length.
  std::vector<Matrix> cur(g.universe_size());
  cur[alpha] = Matrix::Identity(da, da);
  Matrix total = Matrix::Zero(wg.dim(omega), da);
  if (alpha == omega) total += cur[alpha];
  const auto edges = g.edges();
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<Matrix> next(g.universe_size());
    for (auto [u, v] : edges) {
      if (cur[u].size() == 0) continue;
      Matrix step = wg.weight(u, v) * cur[u];
      if (next[v].size() == 0) {
        next[v] = std::move(step);
      } else {
        next[v] += step;
      }
    }
    cur = std::move(next);
    if (cur[omega].size() != 0) total += cur[omega];
  }
  return total;
}

namespace {

std::vector<Eigen::Index> offsets(const WeightedDigraph& wg, Eigen::Index& total) {
  std::vector<Eigen::Index> off(wg.graph().universe_size(), -1);
  total = 0;
  for (Vertex v : wg.graph().vertices()) {
    off[v] = total;
    total += static_cast<Eigen::Index>(wg.dim(v));
  }
  return off;
}

}  // namespace

Matrix block_matrix(const WeightedDigraph& wg) {
  Eigen::Index n = 0;
  const auto off = offsets(wg, n);
  Matrix a = Matrix::Zero(n, n);
  for (auto [from, to] : wg.graph().edges()) {
    const Matrix& w = wg.weight(from, to);
    a.block(off[to], off[from], w.rows(), w.cols()) = w;
  }
  return a;
}

double spectral_radius(const WeightedDigraph& wg) {
  const Matrix a = block_matrix(wg);
  if (a.size() == 0) return 0.0;
  Eigen::ComplexEigenSolver<Matrix> es(a, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix resolvent_entry(const WeightedDigraph& wg, Vertex alpha, Vertex omega) {
  const Digraph& g = wg.graph();
  if (!g.contains(alpha) || !g.contains(omega)) throw DomainError("vertex is not in the graph");
  Eigen::Index n = 0;
  const auto off = offsets(wg, n);
  const Matrix m = Matrix::Identity(n, n) - block_matrix(wg);
  Eigen::PartialPivLU<Matrix> lu(m);
  if (!(lu.rcond() >= 1e-12)) throw SingularMatrixError("I - A is numerically singular");
  const auto da = static_cast<Eigen::Index>(wg.dim(alpha));
  Matrix rhs = Matrix::Zero(n, da);
  rhs.block(off[alpha], 0, da, da) = Matrix::Identity(da, da);
  const Matrix x = lu.solve(rhs);
  return x.block(off[omega], 0, static_cast<Eigen::Index>(wg.dim(omega)), da);
}

}  // namespace walkpart
