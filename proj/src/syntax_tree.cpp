#include "walkpart/syntax_tree.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace walkpart {

namespace {

SyntaxTree cycle_node(std::vector<Vertex> c);

// Loop erasure: a stack of (vertex, index of its latest visit) with the cycles
// extracted off each stacked vertex.
SyntaxTree factor_sequence(const std::vector<Vertex>& seq) {
  struct Entry {
    Vertex v;
    std::size_t at;
    std::vector<std::vector<Vertex>> cycles;
  };
  std::vector<Entry> stack;
  std::unordered_map<Vertex, std::size_t> pos;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const Vertex v = seq[t];
    auto it = pos.find(v);
    if (it == pos.end()) {
      pos.emplace(v, stack.size());
      stack.push_back({v, t, {}});
      continue;
    }
    const std::size_t k = it->second;
    for (std::size_t j = k + 1; j < stack.size(); ++j) pos.erase(stack[j].v);
    stack.resize(k + 1);
    stack[k].cycles.emplace_back(seq.begin() + stack[k].at, seq.begin() + t + 1);
    stack[k].at = t;
  }
  SyntaxTree t;
  std::vector<Vertex> base;
  for (auto& e : stack) {
    base.push_back(e.v);
    if (e.cycles.empty()) continue;
    Hedge h;
    for (auto& c : e.cycles) h.push_back(cycle_node(std::move(c)));
    t.hedges.push_back(std::move(h));
  }
  t.root = Walk(std::move(base));
  return t;
}

SyntaxTree cycle_node(std::vector<Vertex> c) {
  const Vertex alpha = c.front();
  if (c.size() == 2) return SyntaxTree{Walk(std::move(c)), {}};
  SyntaxTree inner = factor_sequence(std::vector<Vertex>(c.begin() + 1, c.end() - 1));
  std::vector<Vertex> base{alpha};
  base.insert(base.end(), inner.root.vertices().begin(), inner.root.vertices().end());
  base.push_back(alpha);
  inner.root = Walk(std::move(base));
  return inner;
}

Walk hedge_contents(const Hedge& h) {
  Walk out;
  for (const auto& sub : h) {
    Walk c = tree_contents(sub);
    out = out.is_zero() ? c : concatenate(out, c);
  }
  return out;
}

bool canonical_node(const SyntaxTree& t, bool is_root) {
  const WalkClass wc = classify(t.root);
  if (is_root ? !wc.is_simple_path : !wc.is_simple_cycle) return false;
  const auto& base = t.root.vertices();
  std::size_t last = 0;
  bool first = true;
  for (const auto& h : t.hedges) {
    if (h.empty()) return false;
    const Vertex v = h.front().root.head();
    auto it = std::find(base.begin(), base.end(), v);
    if (it == base.end()) return false;
    const std::size_t p = it - base.begin();
    if (!is_root && p == 0) return false;
    if (!first && p <= last) return false;
    first = false;
    last = p;
    for (const auto& sub : h) {
      if (sub.root.is_zero() || sub.root.head() != v || !canonical_node(sub, false)) return false;
    }
  }
  return true;
}

}  // namespace

SyntaxTree prime_factorize(const Walk& w) {
  if (w.is_zero()) throw DomainError("cannot factorize the zero walk");
  return factor_sequence(w.vertices());
}

SyntaxTree factor_cycle(const Walk& c) {
  if (c.is_zero() || !classify(c).is_cycle) throw DomainError("walk is not a cycle");
  return cycle_node(c.vertices());
}

Walk tree_contents(const SyntaxTree& t) {
  Walk out = t.root;
  for (auto it = t.hedges.rbegin(); it != t.hedges.rend(); ++it) {
    if (it->empty()) continue;
    out = nest(out, hedge_contents(*it));
    if (out.is_zero()) throw DomainError("syntax tree does not nest into a walk");
  }
  return out;
}

bool is_canonical(const SyntaxTree& t) {
  if (t.root.is_zero()) return false;
  return canonical_node(t, true);
}

std::size_t anchor_position(const SyntaxTree& t, const Hedge& h) {
  if (h.empty()) throw DomainError("empty hedge");
  const auto& base = t.root.vertices();
  const Vertex v = h.front().root.head();
  // A cycle's head appears at both ends; children hang from internal vertices.
  const std::size_t start = (base.size() > 1 && base.front() == base.back()) ? 1 : 0;
  auto it = std::find(base.begin() + start, base.end(), v);
  if (it == base.end()) throw DomainError("hedge does not hang from the base walk");
  return it - base.begin();
}

std::vector<const Hedge*> hedges_by_position(const SyntaxTree& t) {
  std::vector<const Hedge*> out(t.root.vertices().size(), nullptr);
  for (const auto& h : t.hedges) {
    if (h.empty()) continue;
    out[anchor_position(t, h)] = &h;
  }
  return out;
}

std::size_t node_count(const SyntaxTree& t) {
  std::size_t n = 1;
  for (const auto& h : t.hedges)
    for (const auto& sub : h) n += node_count(sub);
  return n;
}

std::vector<Walk> kleene_closure(const std::vector<Walk>& cycles, Vertex base,
                                 std::size_t max_len) {
  for (const auto& c : cycles) {
    if (c.is_zero() || !c.is_closed() || c.head() != base)
      throw DomainError("kleene closure needs closed walks off a common vertex");
  }
  std::set<Walk> seen{Walk::trivial(base)};
  std::vector<Walk> frontier{Walk::trivial(base)};
  while (!frontier.empty()) {
    std::vector<Walk> next;
    for (const auto& w : frontier) {
      for (const auto& c : cycles) {
        if (c.is_trivial() || w.length() + c.length() > max_len) continue;
        Walk x = concatenate(w, c);
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace walkpart
