#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "walkpart/digraph.hpp"
#include "walkpart/syntax_tree.hpp"
#include "walkpart/walk.hpp"

namespace walkpart {

// [k_0, ..., k_{D-1}, 0]: bounds on simple-cycle lengths, one per nesting
// depth.
class Signature {
 public:
  Signature() : entries_{0} {}
  explicit Signature(std::vector<unsigned> entries);

  static Signature parse(std::string_view text);

  std::size_t depth() const noexcept { return entries_.size() - 1; }
  // k_l, with k_l = 0 for l >= depth.
  unsigned operator[](std::size_t l) const noexcept {
    return l < entries_.size() ? entries_[l] : 0;
  }
  const std::vector<unsigned>& entries() const noexcept { return entries_; }

  Signature drop_head() const;
  // [k_l, ..., k_{D-1}, 0]
  Signature suffix(std::size_t l) const;
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b);

 private:
  std::vector<unsigned> entries_;
};

std::strong_ordering shortlex_compare(const Signature& a, const Signature& b);

// Entrywise comparison after padding with zeros: every K-structured cycle is
// then also L-structured.
bool dominates(const Signature& big, const Signature& small);

bool is_k_structured(const Walk& c, const Signature& k);
// Same predicate on a cycle subtree, against the suffix [k_l, ..., 0].
bool is_structured_node(const SyntaxTree& node, const Signature& k, std::size_t l);

Signature kmax(const Digraph& g);

std::vector<Walk> structured_cycles(const Digraph& g, Vertex alpha, const Signature& k,
                                    std::size_t max_len);

}  // namespace walkpart
