#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "walkpart/signature.hpp"
#include "walkpart/syntax_tree.hpp"
#include "walkpart/walk.hpp"

namespace walkpart {

// Path from the root: (hedge index, position within hedge) per step.
using NodePath = std::vector<std::pair<std::size_t, std::size_t>>;

using LocalDepths = std::map<NodePath, std::size_t>;

LocalDepths local_depths(const SyntaxTree& t, const Signature& k);

const SyntaxTree& node_at(const SyntaxTree& t, const NodePath& path);

bool is_resummable(const SyntaxTree& t, const NodePath& node, const Signature& k);

// Reduced cycle subtree, or nullopt when it collapses to its trivial walk.
std::optional<SyntaxTree> reduce_cycle_tree(const SyntaxTree& node, const Signature& k,
                                            std::size_t l);
SyntaxTree reduce_walk_tree(const SyntaxTree& t, const Signature& k);

// Same as reduce_walk_tree, also collecting the paths of the proper subtrees
// it deletes (every node inside a collapsed subtree).
SyntaxTree reduce_walk_tree(const SyntaxTree& t, const Signature& k,
                            std::vector<NodePath>& deleted);

Walk cycle_reduce(const Walk& c, const Signature& k, std::size_t l);
Walk walk_reduce(const Walk& w, const Signature& k);

bool is_irreducible(const Walk& w, const Signature& k);
bool is_cycle_irreducible(const Walk& c, const Signature& k, std::size_t l);
bool equivalent(const Walk& w1, const Walk& w2, const Signature& k);

}  // namespace walkpart
