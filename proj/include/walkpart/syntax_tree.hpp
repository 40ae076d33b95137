#pragma once

#include <cstddef>
#include <vector>

#include "walkpart/walk.hpp"

namespace walkpart {

struct SyntaxTree;
using Hedge = std::vector<SyntaxTree>;

// Generalized tree: a root walk plus an ordered list of hedges, each an
// ordered list of subtrees.
struct SyntaxTree {
  Walk root;
  std::vector<Hedge> hedges;

  friend bool operator==(const SyntaxTree&, const SyntaxTree&) = default;
};

// Canonical tree: the root holds a simple path, every other node a simple
// cycle. One hedge per base vertex carrying cycles, ordered by position along
// the base; cycles inside a hedge in traversal order.
SyntaxTree prime_factorize(const Walk& w);

// Canonical subtree of a cycle: its root is the base simple cycle.
SyntaxTree factor_cycle(const Walk& c);

// root ∘ H_n ∘ ... ∘ H_1, where each hedge contributes the concatenation of
// its subtrees' contents.
Walk tree_contents(const SyntaxTree& t);

bool is_canonical(const SyntaxTree& t);

// Position along t.root of the vertex a hedge hangs from.
std::size_t anchor_position(const SyntaxTree& t, const Hedge& h);

// For each position of t.root, the hedge hanging there (or nullptr).
std::vector<const Hedge*> hedges_by_position(const SyntaxTree& t);

std::size_t node_count(const SyntaxTree& t);

// All concatenations of elements of `cycles` (closed walks off base) with
// length at most max_len, including the trivial walk (base).
std::vector<Walk> kleene_closure(const std::vector<Walk>& cycles, Vertex base,
                                 std::size_t max_len);

}  // namespace walkpart
