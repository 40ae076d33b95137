#include "walkpart/walk.hpp"

#include <algorithm>
#include <unordered_set>

namespace walkpart {

Walk::Walk(std::vector<Vertex> vertices) : seq_(std::move(vertices)) {
  if (seq_.empty()) throw DomainError("a walk needs at least one vertex");
}

std::size_t Walk::length() const {
  if (is_zero()) throw DomainError("the zero walk has no length");
  return seq_.size() - 1;
}

Vertex Walk::head() const {
  if (is_zero()) throw DomainError("the zero walk has no head");
  return seq_.front();
}

Vertex Walk::tail() const {
  if (is_zero()) throw DomainError("the zero walk has no tail");
  return seq_.back();
}

bool Walk::is_closed() const { return head() == tail(); }

std::size_t WalkHash::operator()(const Walk& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Vertex v : w.vertices()) h = (h ^ v) * 0x100000001b3ull;
  return h;
}

WalkClass classify(const Walk& w) {
  if (w.is_zero()) throw DomainError("cannot classify the zero walk");
  const auto& s = w.vertices();
  WalkClass c;
  c.is_closed = w.is_closed();
  std::unordered_set<Vertex> seen(s.begin(), s.end());
  c.is_simple_path = seen.size() == s.size();
  if (c.is_closed && !w.is_trivial()) {
    auto inner_begin = s.begin() + 1, inner_end = s.end() - 1;
    c.is_cycle = std::find(inner_begin, inner_end, s.front()) == inner_end;
    std::unordered_set<Vertex> inner(inner_begin, inner_end);
    c.is_simple_cycle = c.is_cycle && inner.size() == s.size() - 2;
  }
  return c;
}

bool nestable(const Walk& w1, const Walk& w2) {
  if (w1.is_zero() || w2.is_zero()) throw DomainError("nestable is undefined for the zero walk");
  if (!w2.is_closed()) return false;
  const auto& a = w1.vertices();
  const auto& b = w2.vertices();
  auto first = std::find(a.begin(), a.end(), b.front());
  if (first == a.end()) return false;
  std::unordered_set<Vertex> body(b.begin(), b.end() - 1);
  if (b.size() == 1) body.insert(b.front());
  return std::none_of(a.begin(), first, [&](Vertex v) { return body.count(v) > 0; });
}

Walk nest(const Walk& w1, const Walk& w2) {
  if (w1.is_zero() || w2.is_zero() || !nestable(w1, w2)) return Walk::zero();
  const auto& a = w1.vertices();
  const auto& b = w2.vertices();
  auto last = std::find(a.rbegin(), a.rend(), b.front()).base() - 1;
  std::vector<Vertex> out(a.begin(), last);
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), last + 1, a.end());
  return Walk(std::move(out));
}

Walk concatenate(const Walk& a, const Walk& b) {
  if (a.is_zero() || b.is_zero()) return Walk::zero();
  if (a.tail() != b.head()) throw DomainError("walks do not meet");
  std::vector<Vertex> out = a.vertices();
  out.insert(out.end(), b.vertices().begin() + 1, b.vertices().end());
  return Walk(std::move(out));
}

}  // namespace walkpart
