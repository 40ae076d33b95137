#include "walkpart/reduction.hpp"

namespace walkpart {

namespace {

void depths_rec(const SyntaxTree& t, const Signature& k, const NodePath& path, std::size_t depth,
                bool is_root, LocalDepths& out) {
  out[path] = depth;
  for (std::size_t hi = 0; hi < t.hedges.size(); ++hi) {
    const Hedge& h = t.hedges[hi];
    const bool short_base = !is_root && t.root.length() <= k[depth];
    bool left_structured = true;
    for (std::size_t j = 0; j < h.size(); ++j) {
      const std::size_t d = (short_base && left_structured) ? depth + 1 : 0;
      NodePath child = path;
      child.emplace_back(hi, j);
      depths_rec(h[j], k, child, d, false, out);
      if (short_base) left_structured = left_structured && is_structured_node(h[j], k, depth + 1);
    }
  }
}

void collect_paths(const SyntaxTree& t, const NodePath& path, std::vector<NodePath>& out) {
  out.push_back(path);
  for (std::size_t hi = 0; hi < t.hedges.size(); ++hi)
    for (std::size_t j = 0; j < t.hedges[hi].size(); ++j) {
      NodePath child = path;
      child.emplace_back(hi, j);
      collect_paths(t.hedges[hi][j], child, out);
    }
}

std::optional<SyntaxTree> reduce_rec(const SyntaxTree& node, const Signature& k, std::size_t l,
                                     const NodePath& path, std::vector<NodePath>& deleted);

// Reduces one child, recording its deletions; the whole subtree is recorded
// when it collapses.
std::optional<SyntaxTree> reduce_child(const SyntaxTree& child, const Signature& k, std::size_t l,
                                       const NodePath& path, std::vector<NodePath>& deleted) {
  std::vector<NodePath> inner;
  auto r = reduce_rec(child, k, l, path, inner);
  if (r) {
    deleted.insert(deleted.end(), inner.begin(), inner.end());
  } else {
    collect_paths(child, path, deleted);
  }
  return r;
}

std::optional<SyntaxTree> reduce_rec(const SyntaxTree& node, const Signature& k, std::size_t l,
                                     const NodePath& path, std::vector<NodePath>& deleted) {
  const bool short_base = node.root.length() <= k[l];
  SyntaxTree out{node.root, {}};
  std::vector<NodePath> mine;
  bool survives = !short_base;
  for (std::size_t hi = 0; hi < node.hedges.size(); ++hi) {
    const Hedge& h = node.hedges[hi];
    Hedge kept;
    bool found = !short_base;  // reached s_i
    for (std::size_t j = 0; j < h.size(); ++j) {
      NodePath cp = path;
      cp.emplace_back(hi, j);
      auto r = reduce_child(h[j], k, found ? 0 : l + 1, cp, mine);
      if (!r) continue;
      found = true;
      kept.push_back(std::move(*r));
    }
    if (!kept.empty()) {
      survives = true;
      out.hedges.push_back(std::move(kept));
    }
  }
  if (!survives) return std::nullopt;
  deleted.insert(deleted.end(), mine.begin(), mine.end());
  return out;
}

void check_level(const Signature& k, std::size_t l) {
  if (l > k.depth()) throw DomainError("reduction level exceeds the signature depth");
}

}  // namespace

LocalDepths local_depths(const SyntaxTree& t, const Signature& k) {
  if (!is_canonical(t)) throw DomainError("local depths need a canonical syntax tree");
  LocalDepths out;
  depths_rec(t, k, {}, 0, true, out);
  return out;
}

const SyntaxTree& node_at(const SyntaxTree& t, const NodePath& path) {
  const SyntaxTree* cur = &t;
  for (auto [hi, j] : path) {
    if (hi >= cur->hedges.size() || j >= cur->hedges[hi].size())
      throw DomainError("no syntax tree node at that path");
    cur = &cur->hedges[hi][j];
  }
  return *cur;
}

bool is_resummable(const SyntaxTree& t, const NodePath& node, const Signature& k) {
  if (node.empty()) throw DomainError("the root of a syntax tree is not a cycle");
  const auto depths = local_depths(t, k);
  return is_structured_node(node_at(t, node), k, depths.at(node));
}

std::optional<SyntaxTree> reduce_cycle_tree(const SyntaxTree& node, const Signature& k,
                                            std::size_t l) {
  check_level(k, l);
  std::vector<NodePath> ignored;
  return reduce_rec(node, k, l, {}, ignored);
}

SyntaxTree reduce_walk_tree(const SyntaxTree& t, const Signature& k,
                            std::vector<NodePath>& deleted) {
  SyntaxTree out{t.root, {}};
  for (std::size_t hi = 0; hi < t.hedges.size(); ++hi) {
    Hedge kept;
    for (std::size_t j = 0; j < t.hedges[hi].size(); ++j) {
      auto r = reduce_child(t.hedges[hi][j], k, 0, {{hi, j}}, deleted);
      if (r) kept.push_back(std::move(*r));
    }
    if (!kept.empty()) out.hedges.push_back(std::move(kept));
  }
  return out;
}

SyntaxTree reduce_walk_tree(const SyntaxTree& t, const Signature& k) {
  std::vector<NodePath> ignored;
  return reduce_walk_tree(t, k, ignored);
}

Walk cycle_reduce(const Walk& c, const Signature& k, std::size_t l) {
  check_level(k, l);
  if (c.is_zero()) throw DomainError("cannot reduce the zero walk");
  if (c.is_trivial()) return c;
  auto r = reduce_cycle_tree(factor_cycle(c), k, l);
  return r ? tree_contents(*r) : Walk::trivial(c.head());
}

Walk walk_reduce(const Walk& w, const Signature& k) {
  if (w.is_zero()) throw DomainError("cannot reduce the zero walk");
  return tree_contents(reduce_walk_tree(prime_factorize(w), k));
}

bool is_irreducible(const Walk& w, const Signature& k) { return walk_reduce(w, k) == w; }

bool is_cycle_irreducible(const Walk& c, const Signature& k, std::size_t l) {
  return cycle_reduce(c, k, l) == c;
}

bool equivalent(const Walk& w1, const Walk& w2, const Signature& k) {
  return walk_reduce(w1, k) == walk_reduce(w2, k);
}

}  // namespace walkpart
