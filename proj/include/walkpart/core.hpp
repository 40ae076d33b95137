#pragma once

#include <cstdint>
#include <stdexcept>

namespace walkpart {

using Vertex = std::uint32_t;

// Input outside the domain of an operation (bad walk, bad signature, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace walkpart
