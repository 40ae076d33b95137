#include "walkpart/notation.hpp"

#include <sstream>

namespace walkpart {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::string join_labels(const std::vector<Vertex>& vs, const Digraph& g) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += g.label(vs[i]);
  }
  return out;
}

void dot_node(const SyntaxTree& t, const Digraph& g, std::size_t& next, std::ostringstream& os) {
  const std::size_t me = next++;
  os << "  n" << me << " [label=\"" << join_labels(t.root.vertices(), g) << "\"];\n";
  for (const auto& h : t.hedges) {
    for (const auto& sub : h) {
      const std::size_t child = next;
      dot_node(sub, g, next, os);
      os << "  n" << me << " -> n" << child << ";\n";
    }
  }
}

}  // namespace

std::vector<std::string> split_walk_labels(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw DomainError("empty walk");
  if (s == "0") return {};
  if (s.front() == '(' && s.back() == ')') {
    std::string inner = trim(std::string_view(s).substr(1, s.size() - 2));
    if (inner.empty() || inner.find(',') != std::string::npos)
      throw DomainError("a trivial walk holds exactly one vertex");
    return {inner};
  }
  std::vector<std::string> labels;
  if (s.find(',') == std::string::npos) {
    for (char ch : s) {
      if (ch == ' ' || ch == '\t') continue;
      labels.emplace_back(1, ch);
    }
    return labels;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    std::string piece = trim(std::string_view(s).substr(start, comma - start));
    if (piece.empty()) throw DomainError("empty vertex label in walk '" + s + "'");
    labels.push_back(std::move(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return labels;
}

Walk parse_walk(std::string_view text, const Digraph& g) {
  auto labels = split_walk_labels(text);
  if (labels.empty()) return Walk::zero();
  std::vector<Vertex> vs;
  for (const auto& l : labels) vs.push_back(g.index_of(l));
  return Walk(std::move(vs));
}

std::string format_walk(const Walk& w, const Digraph& g) {
  if (w.is_zero()) return "0";
  if (w.is_trivial()) return "(" + g.label(w.head()) + ")";
  return join_labels(w.vertices(), g);
}

std::string format_tree(const SyntaxTree& t, const Digraph& g) {
  std::string out = format_walk(t.root, g);
  for (const auto& h : t.hedges) {
    if (h.empty()) continue;
    out += '[';
    out += g.label(h.front().root.head());
    out += ": ";
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i) out += "; ";
      out += format_tree(h[i], g);
    }
    out += ']';
  }
  return out;
}

nlohmann::json tree_to_json(const SyntaxTree& t, const Digraph& g) {
  nlohmann::json hedges = nlohmann::json::array();
  for (const auto& h : t.hedges) {
    if (h.empty()) continue;
    nlohmann::json children = nlohmann::json::array();
    for (const auto& sub : h) children.push_back(tree_to_json(sub, g));
    hedges.push_back({{"vertex", g.label(h.front().root.head())}, {"children", children}});
  }
  return {{"contents", format_walk(t.root, g)}, {"hedges", hedges}};
}

std::string tree_to_dot(const SyntaxTree& t, const Digraph& g) {
  std::ostringstream os;
  os << "digraph syntax_tree {\n";
  std::size_t next = 0;
  dot_node(t, g, next, os);
  os << "}\n";
  return os.str();
}

}  // namespace walkpart
