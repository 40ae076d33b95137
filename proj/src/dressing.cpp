#include "walkpart/dressing.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cycle_sets.hpp"
#include "walkpart/enumeration.hpp"
#include "walkpart/notation.hpp"
#include "walkpart/reduction.hpp"

namespace walkpart {

namespace {

using detail::Seq;
using detail::SeqSet;

class Dresser {
 public:
  explicit Dresser(const Signature& k) : k_(k), sets_(k) {}

  // Cycles c with r^{K;l}(c) = contents of node, length <= max_len.
  SeqSet cycle(const Digraph& g, const SyntaxTree& node, std::size_t l, std::size_t max_len) {
    const std::size_t own = tree_contents(node).length();
    if (own > max_len) return {};
    const std::size_t extra = max_len - own;
    const Seq& base = node.root.vertices();
    const bool short_base = node.root.length() <= k_[l];
    const auto hedges = hedges_by_position(node);
    std::deque<SeqSet> store;
    std::vector<const SeqSet*> blocks;
    Digraph sub = g;
    for (std::size_t i = 1; i + 1 < base.size(); ++i) {
      sub = sub.remove_vertices(std::span<const Vertex>(&base[i - 1], 1));
      if (!hedges[i]) {
        blocks.push_back(&sets_.structured_star(sub, base[i], short_base ? l + 1 : 0, extra));
        continue;
      }
      store.push_back(hedge_block(sub, base[i], *hedges[i], short_base ? l + 1 : 0, extra));
      blocks.push_back(&store.back());
    }
    auto out = detail::product({base.front()}, blocks, false, {base.front()}, max_len);
    detail::normalize(out);
    return out;
  }

  // Walks w with R^K(w) = contents of t, length <= max_len.
  SeqSet walk(const Digraph& g, const SyntaxTree& t, std::size_t max_len) {
    const std::size_t own = tree_contents(t).length();
    if (own > max_len) return {};
    const std::size_t extra = max_len - own;
    const Seq& base = t.root.vertices();
    const auto hedges = hedges_by_position(t);
    std::deque<SeqSet> store;
    std::vector<const SeqSet*> blocks;
    Digraph sub = g;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (i) sub = sub.remove_vertices(std::span<const Vertex>(&base[i - 1], 1));
      if (!hedges[i]) {
        blocks.push_back(&sets_.structured_star(sub, base[i], 0, extra));
        continue;
      }
      store.push_back(hedge_block(sub, base[i], *hedges[i], 0, extra));
      blocks.push_back(&store.back());
    }
    auto out = detail::product({}, blocks, false, {}, max_len);
    detail::normalize(out);
    return out;
  }

 private:
  // Starred structured cycles before every child (level first_level before
  // the first one, 0 afterwards), each child dressed, then C^K starred.
  SeqSet hedge_block(const Digraph& g, Vertex mu, const Hedge& h, std::size_t first_level,
                     std::size_t extra) {
    std::deque<SeqSet> store;
    std::vector<const SeqSet*> parts;
    std::size_t inner = extra;
    for (std::size_t j = 0; j < h.size(); ++j) {
      const std::size_t lj = j == 0 ? first_level : 0;
      const std::size_t child_len = tree_contents(h[j]).length();
      inner += child_len;
      parts.push_back(&sets_.structured_star(g, mu, lj, extra));
      store.push_back(cycle(g, h[j], lj, extra + child_len));
      parts.push_back(&store.back());
    }
    parts.push_back(&sets_.structured_star(g, mu, 0, extra));
    auto out = detail::product({}, parts, true, {}, inner);
    detail::normalize(out);
    return out;
  }

  Signature k_;
  detail::CycleSets sets_;
};

std::vector<Walk> to_walks(const SeqSet& s) {
  std::vector<Walk> out;
  out.reserve(s.size());
  for (const auto& x : s) out.emplace_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Walk> cycle_dress(const Walk& q, const Signature& k, std::size_t l, const Digraph& g,
                              std::size_t max_len) {
  if (l > k.depth()) throw DomainError("level exceeds the signature depth");
  if (!g.admits(q)) throw DomainError("cycle is not a walk on the graph");
  if (!classify(q).is_cycle || cycle_reduce(q, k, l) != q)
    throw DomainError("cycle is not irreducible at this level");
  Dresser d(k);
  return to_walks(d.cycle(g, factor_cycle(q), l, max_len));
}

std::vector<Walk> walk_dress(const Walk& i, const Signature& k, const Digraph& g,
                             std::size_t max_len) {
  if (!g.admits(i)) throw DomainError("walk is not a walk on the graph");
  if (!is_irreducible(i, k)) throw DomainError("walk is not irreducible");
  Dresser d(k);
  return to_walks(d.walk(g, prime_factorize(i), max_len));
}

PartitionReport partition_check(const Digraph& g, const Signature& k, std::size_t max_len) {
  PartitionReport report;
  Dresser dresser(k);
  auto say = [&](const std::string& what, const Walk& w) {
    report.violations.push_back(what + ": " + format_walk(w, g));
  };
  for (Vertex alpha : g.vertices()) {
    for (Vertex omega : g.vertices()) {
      const auto walks = all_walks(g, alpha, omega, max_len);
      const auto cores = irreducible_walks(g, alpha, omega, k, max_len);
      report.walk_count += walks.size();
      report.class_count += cores.size();
      std::map<Walk, std::vector<Walk>> owners;
      for (const Walk& i : cores) {
        if (!is_irreducible(i, k)) say("enumerated walk is not irreducible", i);
        const auto cls = to_walks(dresser.walk(g, prime_factorize(i), max_len));
        if (cls.empty()) say("empty class", i);
        if (!std::binary_search(cls.begin(), cls.end(), i)) say("class misses its core", i);
        for (const Walk& w : cls) {
          if (!g.admits(w) || w.length() > max_len) say("class holds a foreign walk", w);
          if (walk_reduce(w, k) != i) say("class member reduces elsewhere", w);
          owners[w].push_back(i);
        }
      }
      for (const Walk& w : walks) {
        const Walk core = walk_reduce(w, k);
        if (!is_irreducible(core, k)) say("reduction is not irreducible", w);
        if (!std::binary_search(cores.begin(), cores.end(), core))
          say("core missing from the irreducible enumeration", w);
        auto it = owners.find(w);
        if (it == owners.end()) {
          say("walk in no class", w);
        } else if (it->second.size() != 1) {
          say("walk in several classes", w);
        } else if (it->second.front() != core) {
          say("walk dressed from a different core", w);
        }
      }
      std::size_t dressed = 0;
      for (const auto& [w, who] : owners) dressed += who.size();
      if (dressed != walks.size()) {
        report.violations.push_back("class sizes do not add up for " + g.label(alpha) + "->" +
                                    g.label(omega));
      }
    }
  }
  return report;
}

}  // namespace walkpart
