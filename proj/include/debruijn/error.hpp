#pragma once

#include <stdexcept>
#include <string>

namespace debruijn {

/// Bad user-supplied values: out-of-range vertices, malformed cycles, invalid moves.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// Operation undefined for the given parameters (typically requires d | N).
class unsupported_operation : public std::runtime_error {
 public:
  explicit unsupported_operation(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or search exceeded its configured resource budget.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A self-check failed. Indicates a bug in this library, never a user error.
class invariant_violation : public std::runtime_error {
 public:
  explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace debruijn
