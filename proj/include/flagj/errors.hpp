#pragma once

#include <stdexcept>
#include <string>

namespace flagj {

/// Rejected user input: malformed configs, invalid algebra specs, bad structures.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction was well-formed but has no valid result (zero denominators, sign clashes).
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed. Never valid output; indicates a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace flagj
