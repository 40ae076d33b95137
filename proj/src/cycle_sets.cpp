#include "cycle_sets.hpp"

#include <algorithm>

namespace walkpart::detail {

void normalize(SeqSet& s) {
  std::sort(s.begin(), s.end(), [](const Seq& a, const Seq& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

namespace {

struct ProductState {
  const std::vector<const SeqSet*>& parts;
  bool join;
  const Seq& suffix;
  std::size_t max_vertices;
  std::vector<std::size_t> min_rest;
  SeqSet& out;
};

void product_rec(ProductState& st, std::size_t idx, Seq& cur) {
  if (idx == st.parts.size()) {
    if (cur.size() + st.suffix.size() <= st.max_vertices) {
      Seq done = cur;
      done.insert(done.end(), st.suffix.begin(), st.suffix.end());
      st.out.push_back(std::move(done));
    }
    return;
  }
  const std::size_t rest = st.min_rest[idx + 1] + st.suffix.size();
  for (const Seq& e : *st.parts[idx]) {
    const std::size_t skip = (st.join && !cur.empty()) ? 1 : 0;
    // Parts are sorted by size, so later elements only grow.
    if (cur.size() + e.size() - skip + rest > st.max_vertices) break;
    const std::size_t mark = cur.size();
    cur.insert(cur.end(), e.begin() + skip, e.end());
    product_rec(st, idx + 1, cur);
    cur.resize(mark);
  }
}

}  // namespace

SeqSet product(const Seq& prefix, const std::vector<const SeqSet*>& parts, bool join,
               const Seq& suffix, std::size_t max_len) {
  SeqSet out;
  std::vector<std::size_t> min_rest(parts.size() + 1, 0);
  for (std::size_t i = parts.size(); i-- > 0;) {
    if (parts[i]->empty()) return out;
    std::size_t m = parts[i]->front().size();
    for (const Seq& e : *parts[i]) m = std::min(m, e.size());
    const bool shares = join && (i > 0 || !prefix.empty());
    min_rest[i] = min_rest[i + 1] + m - (shares ? 1 : 0);
  }
  ProductState st{parts, join, suffix, max_len + 1, std::move(min_rest), out};
  Seq cur = prefix;
  product_rec(st, 0, cur);
  return out;
}

SeqSet star(const SeqSet& cycles, Vertex v, std::size_t max_len) {
  SeqSet out{{v}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Seq& c : cycles) {
      if (out[i].size() + c.size() - 2 > max_len) break;
      Seq x = out[i];
      x.insert(x.end(), c.begin() + 1, c.end());
      out.push_back(std::move(x));
    }
  }
  normalize(out);
  return out;
}

namespace {

template <class F>
const SeqSet& memo(std::map<std::tuple<std::vector<bool>, Vertex, std::size_t, std::size_t>, SeqSet>& cache,
                   const Digraph& g, Vertex a, std::size_t level, std::size_t max_len, F&& build) {
  auto key = std::make_tuple(g.active(), a, level, max_len);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SeqSet s = build();
  normalize(s);
  return cache.emplace(std::move(key), std::move(s)).first->second;
}

// Subgraphs for the internal vertices of a simple cycle: entry i is g with
// the cycle's vertices before position i + 1 deleted.
std::vector<Digraph> prefix_subgraphs(const Digraph& g, const Seq& s) {
  std::vector<Digraph> out;
  Digraph cur = g;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const Vertex prev = s[i - 1];
    cur = cur.remove_vertices(std::span<const Vertex>(&prev, 1));
    out.push_back(cur);
  }
  return out;
}

}  // namespace

const SeqSet& CycleSets::structured(const Digraph& g, Vertex a, std::size_t level,
                                    std::size_t max_len) {
  return memo(structured_, g, a, level, max_len, [&] {
    SeqSet out;
    if (level >= k_.depth() || max_len == 0) return out;
    for (const Walk& c : simple_cycles_upto(g, a, std::min<std::size_t>(k_[level], max_len))) {
      const Seq& s = c.vertices();
      const std::size_t len = c.length();
      auto subs = prefix_subgraphs(g, s);
      std::vector<const SeqSet*> blocks;
      for (std::size_t i = 1; i + 1 < s.size(); ++i)
        blocks.push_back(&structured_star(subs[i - 1], s[i], level + 1, max_len - len));
      auto part = product({a}, blocks, false, {a}, max_len);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  });
}

const SeqSet& CycleSets::structured_star(const Digraph& g, Vertex a, std::size_t level,
                                         std::size_t max_len) {
  return memo(structured_star_, g, a, level, max_len,
              [&] { return star(structured(g, a, level, max_len), a, max_len); });
}

const SeqSet& CycleSets::irreducible(const Digraph& g, Vertex a, std::size_t level,
                                     std::size_t max_len) {
  return memo(irreducible_, g, a, level, max_len, [&] {
    SeqSet out;
    for (const Walk& c : simple_cycles_upto(g, a, max_len)) {
      const Seq& s = c.vertices();
      const std::size_t len = c.length();
      const std::size_t inner = s.size() - 2;
      const std::size_t room = max_len - len;
      auto subs = prefix_subgraphs(g, s);
      std::vector<const SeqSet*> free_blocks;
      for (std::size_t i = 0; i < inner; ++i)
        free_blocks.push_back(&irreducible_star(subs[i], s[i + 1], room));
      if (len > k_[level]) {
        auto part = product({a}, free_blocks, false, {a}, max_len);
        out.insert(out.end(), part.begin(), part.end());
        continue;
      }
      // One (K, level+1)-irreducible first child, then free children, on each
      // vertex of a nonempty subset of the internal vertices.
      std::vector<SeqSet> led(inner);
      std::vector<SeqSet> bare(inner);
      for (std::size_t i = 0; i < inner; ++i) {
        const auto& first = irreducible(subs[i], s[i + 1], level + 1, room);
        led[i] = product({}, {&first, free_blocks[i]}, true, {}, room);
        normalize(led[i]);
        bare[i] = {{s[i + 1]}};
      }
      for (std::size_t mask = 1; mask < (std::size_t{1} << inner); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > room) continue;
        std::vector<const SeqSet*> blocks;
        for (std::size_t i = 0; i < inner; ++i)
          blocks.push_back((mask >> i) & 1 ? &led[i] : &bare[i]);
        auto part = product({a}, blocks, false, {a}, max_len);
        out.insert(out.end(), part.begin(), part.end());
      }
    }
    return out;
  });
}

const SeqSet& CycleSets::irreducible_star(const Digraph& g, Vertex a, std::size_t max_len) {
  return memo(irreducible_star_, g, a, 0, max_len,
              [&] { return star(irreducible(g, a, 0, max_len), a, max_len); });
}

}  // namespace walkpart::detail
