#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "walkpart/digraph.hpp"
#include "walkpart/syntax_tree.hpp"
#include "walkpart/walk.hpp"

namespace walkpart {

// Splits walk text into labels. Commas separate labels; text without commas
// is read one character per label. "0" alone is the zero walk (empty result),
// "(a)" is a trivial walk.
std::vector<std::string> split_walk_labels(std::string_view text);

Walk parse_walk(std::string_view text, const Digraph& g);
std::string format_walk(const Walk& w, const Digraph& g);

// Bracket form: contents, then one "[v: child; child]" group per hedge.
std::string format_tree(const SyntaxTree& t, const Digraph& g);
nlohmann::json tree_to_json(const SyntaxTree& t, const Digraph& g);
std::string tree_to_dot(const SyntaxTree& t, const Digraph& g);

}  // namespace walkpart
