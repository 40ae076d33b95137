#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "walkpart/digraph.hpp"
#include "walkpart/signature.hpp"

namespace walkpart::detail {

using Seq = std::vector<Vertex>;
using SeqSet = std::vector<Seq>;

// Orders by length, then lexicographically, and removes duplicates.
void normalize(SeqSet& s);

// prefix, then one element of every part, then suffix. With join set, each
// element after the first shares its first vertex with the previous one;
// otherwise elements are appended whole. Only results of length <= max_len.
SeqSet product(const Seq& prefix, const std::vector<const SeqSet*>& parts, bool join,
               const Seq& suffix, std::size_t max_len);

// Concatenations of closed walks off v, including the trivial walk.
SeqSet star(const SeqSet& cycles, Vertex v, std::size_t max_len);

// Length-bounded K-structured and (K,l)-irreducible cycle sets, memoized on
// (surviving vertices, base vertex, level, bound).
class CycleSets {
 public:
  explicit CycleSets(Signature k) : k_(std::move(k)) {}

  const Signature& signature() const noexcept { return k_; }

  // Cycles off a that are [k_level, ..., 0]-structured.
  const SeqSet& structured(const Digraph& g, Vertex a, std::size_t level, std::size_t max_len);
  const SeqSet& structured_star(const Digraph& g, Vertex a, std::size_t level,
                                std::size_t max_len);
  // (K, level)-irreducible cycles off a.
  const SeqSet& irreducible(const Digraph& g, Vertex a, std::size_t level, std::size_t max_len);
  const SeqSet& irreducible_star(const Digraph& g, Vertex a, std::size_t max_len);

 private:
  using Key = std::tuple<std::vector<bool>, Vertex, std::size_t, std::size_t>;

  Signature k_;
  std::map<Key, SeqSet> structured_, structured_star_, irreducible_, irreducible_star_;
};

}  // namespace walkpart::detail
