#include "walkpart/signature.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "cycle_sets.hpp"

namespace walkpart {

Signature::Signature(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("a signature needs at least one entry");
  if (entries_.back() != 0) throw DomainError("a signature must end with 0");
  const std::size_t d = entries_.size() - 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (entries_[i] == 0) throw DomainError("only the final signature entry may be 0");
    if (i + 1 < d && entries_[i] < 2) {
      throw DomainError("signature entry k_" + std::to_string(i) +
                        " must be at least 2; only the last nonzero entry may be 1");
    }
  }
}

Signature Signature::parse(std::string_view text) {
  std::vector<unsigned> entries;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw DomainError("bad signature entry '" + std::string(piece) + "'");
    entries.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Signature(std::move(entries));
}

Signature Signature::drop_head() const {
  if (depth() == 0) throw DomainError("cannot drop the head of [0]");
  return Signature(std::vector<unsigned>(entries_.begin() + 1, entries_.end()));
}

Signature Signature::suffix(std::size_t l) const {
  if (l > depth()) throw DomainError("signature suffix out of range");
  return Signature(std::vector<unsigned>(entries_.begin() + l, entries_.end()));
}

std::string Signature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
  if (a.entries_.size() != b.entries_.size()) return a.entries_.size() <=> b.entries_.size();
  return a.entries_ <=> b.entries_;
}

std::strong_ordering shortlex_compare(const Signature& a, const Signature& b) { return a <=> b; }

bool dominates(const Signature& big, const Signature& small) {
  const std::size_t n = std::max(big.entries().size(), small.entries().size());
  for (std::size_t i = 0; i < n; ++i)
    if (big[i] < small[i]) return false;
  return true;
}

bool is_structured_node(const SyntaxTree& node, const Signature& k, std::size_t l) {
  if (l >= k.depth() || node.root.length() > k[l]) return false;
  for (const auto& h : node.hedges)
    for (const auto& sub : h)
      if (!is_structured_node(sub, k, l + 1)) return false;
  return true;
}

bool is_k_structured(const Walk& c, const Signature& k) {
  return is_structured_node(factor_cycle(c), k, 0);
}

namespace {

using Profile = std::vector<unsigned>;

void raise(Profile& into, const Profile& p) {
  if (into.size() < p.size()) into.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) into[i] = std::max(into[i], p[i]);
}

// Entry d: longest simple cycle found at nesting depth d among cycles off a.
const Profile& depth_profile(const Digraph& g, Vertex a,
                             std::map<std::pair<std::vector<bool>, Vertex>, Profile>& memo) {
  auto key = std::make_pair(g.active(), a);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Profile out;
  for (const Walk& c : simple_cycles_upto(g, a, g.vertex_count())) {
    const auto& s = c.vertices();
    Profile cand{static_cast<unsigned>(c.length())};
    Profile tail;
    Digraph sub = g;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      sub = sub.remove_vertices(std::span<const Vertex>(&s[i - 1], 1));
      raise(tail, depth_profile(sub, s[i], memo));
    }
    cand.insert(cand.end(), tail.begin(), tail.end());
    raise(out, cand);
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

Signature kmax(const Digraph& g) {
  std::map<std::pair<std::vector<bool>, Vertex>, Profile> memo;
  Profile all;
  for (Vertex v : g.vertices()) raise(all, depth_profile(g, v, memo));
  all.push_back(0);
  return Signature(std::move(all));
}

std::vector<Walk> structured_cycles(const Digraph& g, Vertex alpha, const Signature& k,
                                    std::size_t max_len) {
  if (!g.contains(alpha)) throw DomainError("vertex is not in the graph");
  detail::CycleSets sets(k);
  std::vector<Walk> out;
  for (const auto& s : sets.structured(g, alpha, 0, max_len)) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace walkpart
