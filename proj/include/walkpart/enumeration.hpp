#pragma once

#include <cstddef>
#include <vector>

#include "walkpart/digraph.hpp"
#include "walkpart/signature.hpp"
#include "walkpart/walk.hpp"

namespace walkpart {

std::vector<Walk> all_walks(const Digraph& g, Vertex alpha, Vertex omega, std::size_t max_len);

std::vector<Walk> irreducible_cycles(const Digraph& g, Vertex alpha, const Signature& k,
                                     std::size_t l, std::size_t max_len);

std::vector<Walk> irreducible_walks(const Digraph& g, Vertex alpha, Vertex omega,
                                    const Signature& k, std::size_t max_len);

}  // namespace walkpart
