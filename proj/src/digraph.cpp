#include "walkpart/digraph.hpp"

#include <algorithm>
#include <functional>

namespace walkpart {

Digraph::Digraph(std::vector<std::string> labels,
                 const std::vector<std::pair<Vertex, Vertex>>& edges) {
  auto u = std::make_shared<Universe>();
  u->labels = std::move(labels);
  for (Vertex i = 0; i < u->labels.size(); ++i) {
    if (!u->index.emplace(u->labels[i], i).second)
      throw DomainError("duplicate vertex label '" + u->labels[i] + "'");
  }
  const std::size_t n = u->labels.size();
  universe_ = std::move(u);
  active_.assign(n, true);
  count_ = n;
  out_.assign(n, {});
  adj_.assign(n * n, false);
  for (auto [from, to] : edges) {
    if (from >= n || to >= n) throw DomainError("edge endpoint is not a vertex");
    if (adj_[from * n + to])
      throw DomainError("duplicate edge " + label(from) + "->" + label(to));
    adj_[from * n + to] = true;
    out_[from].push_back(to);
  }
  for (auto& s : out_) std::sort(s.begin(), s.end());
}

std::vector<Vertex> Digraph::vertices() const {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < active_.size(); ++v)
    if (active_[v]) vs.push_back(v);
  return vs;
}

const std::string& Digraph::label(Vertex v) const {
  if (v >= universe_size()) throw DomainError("vertex index out of range");
  return universe_->labels[v];
}

std::optional<Vertex> Digraph::find(std::string_view label) const {
  if (!universe_) return std::nullopt;
  auto it = universe_->index.find(std::string(label));
  if (it == universe_->index.end() || !active_[it->second]) return std::nullopt;
  return it->second;
}

Vertex Digraph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw DomainError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

bool Digraph::has_edge(Vertex from, Vertex to) const noexcept {
  const std::size_t n = universe_size();
  return from < n && to < n && adj_[from * n + to];
}

const std::vector<Vertex>& Digraph::successors(Vertex v) const {
  if (v >= out_.size()) throw DomainError("vertex index out of range");
  return out_[v];
}

std::vector<std::pair<Vertex, Vertex>> Digraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex v = 0; v < out_.size(); ++v)
    for (Vertex w : out_[v]) es.emplace_back(v, w);
  return es;
}

Digraph Digraph::remove_vertices(std::span<const Vertex> vs) const {
  Digraph g = *this;
  const std::size_t n = universe_size();
  for (Vertex v : vs) {
    if (!contains(v)) {
      throw DomainError("cannot remove unknown vertex '" +
                        (v < n ? label(v) : std::to_string(v)) + "'");
    }
    if (g.active_[v]) {
      g.active_[v] = false;
      --g.count_;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!g.active_[v]) {
      for (Vertex w : g.out_[v]) g.adj_[v * n + w] = false;
      g.out_[v].clear();
      continue;
    }
    auto& s = g.out_[v];
    s.erase(std::remove_if(s.begin(), s.end(),
                           [&](Vertex w) {
                             if (g.active_[w]) return false;
                             g.adj_[v * n + w] = false;
                             return true;
                           }),
            s.end());
  }
  return g;
}

Digraph Digraph::remove_vertices(const std::vector<std::string>& labels) const {
  std::vector<Vertex> vs;
  for (const auto& l : labels) vs.push_back(index_of(l));
  return remove_vertices(vs);
}

bool Digraph::admits(const Walk& w) const {
  if (w.is_zero()) return false;
  const auto& s = w.vertices();
  if (!contains(s.front())) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!has_edge(s[i - 1], s[i])) return false;
  return true;
}

namespace {

void cycle_search(const Digraph& g, Vertex alpha, std::size_t max_len, bool exact,
                  std::vector<Vertex>& path, std::vector<bool>& on_path,
                  std::vector<Walk>& out) {
  const std::size_t len = path.size();
  for (Vertex next : g.successors(path.back())) {
    if (next == alpha) {
      if (!exact || len == max_len) {
        auto c = path;
        c.push_back(alpha);
        out.emplace_back(std::move(c));
      }
      continue;
    }
    if (on_path[next] || len >= max_len) continue;
    on_path[next] = true;
    path.push_back(next);
    cycle_search(g, alpha, max_len, exact, path, on_path, out);
    path.pop_back();
    on_path[next] = false;
  }
}

std::vector<Walk> cycles(const Digraph& g, Vertex alpha, std::size_t max_len, bool exact) {
  if (!g.contains(alpha)) throw DomainError("vertex is not in the graph");
  std::vector<Walk> out;
  if (max_len == 0) return out;
  std::vector<Vertex> path{alpha};
  std::vector<bool> on_path(g.universe_size(), false);
  on_path[alpha] = true;
  cycle_search(g, alpha, max_len, exact, path, on_path, out);
  std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<Walk> simple_cycles_at(const Digraph& g, Vertex alpha, std::size_t len) {
  return cycles(g, alpha, len, true);
}

std::vector<Walk> simple_cycles_upto(const Digraph& g, Vertex alpha, std::size_t max_len) {
  return cycles(g, alpha, max_len, false);
}

std::vector<Walk> simple_paths(const Digraph& g, Vertex alpha, Vertex omega) {
  if (!g.contains(alpha) || !g.contains(omega)) throw DomainError("vertex is not in the graph");
  if (alpha == omega) return {Walk::trivial(alpha)};
  std::vector<Walk> out;
  std::vector<Vertex> path{alpha};
  std::vector<bool> on_path(g.universe_size(), false);
  on_path[alpha] = true;
  std::function<void()> go = [&] {
    for (Vertex next : g.successors(path.back())) {
      if (on_path[next]) continue;
      path.push_back(next);
      if (next == omega) {
        out.emplace_back(path);
      } else {
        on_path[next] = true;
        go();
        on_path[next] = false;
      }
      path.pop_back();
    }
  };
  go();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace walkpart
