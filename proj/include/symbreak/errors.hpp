#pragma once

#include <stdexcept>
#include <string>

namespace symbreak {

// Input violates a documented precondition (lattice, chain, chamber, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Vector lengths or index ranges do not match the declared shapes.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter lies outside the range where a formula is guaranteed.
struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

// A state the algorithms promise not to reach; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Contradictory Zero / NonZero facts for the same key.
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Refused oversized computation (desk-scale tool).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Group pair or label kind not handled by this operation.
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symbreak
