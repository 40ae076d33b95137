#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "walkpart/digraph.hpp"
#include "walkpart/signature.hpp"
#include "walkpart/walk.hpp"

namespace walkpart {

std::vector<Walk> cycle_dress(const Walk& q, const Signature& k, std::size_t l, const Digraph& g,
                              std::size_t max_len);

std::vector<Walk> walk_dress(const Walk& i, const Signature& k, const Digraph& g,
                             std::size_t max_len);

struct PartitionReport {
  std::size_t walk_count = 0;
  std::size_t class_count = 0;
  std::vector<std::string> violations;
};

PartitionReport partition_check(const Digraph& g, const Signature& k, std::size_t max_len);

}  // namespace walkpart
