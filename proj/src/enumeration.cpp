#include "walkpart/enumeration.hpp"

#include <algorithm>

#include "cycle_sets.hpp"

namespace walkpart {

namespace {

void walks_rec(const Digraph& g, Vertex omega, std::size_t max_len, std::vector<Vertex>& cur,
               std::vector<Walk>& out) {
  if (cur.back() == omega) out.emplace_back(cur);
  if (cur.size() > max_len) return;
  for (Vertex next : g.successors(cur.back())) {
    cur.push_back(next);
    walks_rec(g, omega, max_len, cur, out);
    cur.pop_back();
  }
}

void check_vertices(const Digraph& g, std::initializer_list<Vertex> vs) {
  for (Vertex v : vs)
    if (!g.contains(v)) throw DomainError("vertex is not in the graph");
}

}  // namespace

std::vector<Walk> all_walks(const Digraph& g, Vertex alpha, Vertex omega, std::size_t max_len) {
  check_vertices(g, {alpha, omega});
  std::vector<Walk> out;
  std::vector<Vertex> cur{alpha};
  walks_rec(g, omega, max_len, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Walk> irreducible_cycles(const Digraph& g, Vertex alpha, const Signature& k,
                                     std::size_t l, std::size_t max_len) {
  check_vertices(g, {alpha});
  if (l > k.depth()) throw DomainError("level exceeds the signature depth");
  detail::CycleSets sets(k);
  std::vector<Walk> out;
  for (const auto& s : sets.irreducible(g, alpha, l, max_len)) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Walk> irreducible_walks(const Digraph& g, Vertex alpha, Vertex omega,
                                    const Signature& k, std::size_t max_len) {
  check_vertices(g, {alpha, omega});
  detail::CycleSets sets(k);
  std::vector<Walk> out;
  for (const Walk& p : simple_paths(g, alpha, omega)) {
    if (p.length() > max_len) continue;
    const auto& s = p.vertices();
    const std::size_t room = max_len - p.length();
    std::vector<const detail::SeqSet*> blocks;
    Digraph sub = g;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) sub = sub.remove_vertices(std::span<const Vertex>(&s[i - 1], 1));
      blocks.push_back(&sets.irreducible_star(sub, s[i], room));
    }
    for (auto& w : detail::product({}, blocks, false, {}, max_len)) out.emplace_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace walkpart
