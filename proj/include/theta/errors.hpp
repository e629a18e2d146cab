#pragma once

#include <stdexcept>
#include <string>

namespace theta {

/// Precondition violated by the caller (bad parameter, index out of range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed user-supplied data (custom group files, partitions, JSON).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same fact disagreed. Never a caller fault.
class ConsistencyError : public std::logic_error {
 public:
  ConsistencyError(std::string theorem, const std::string& detail)
      : std::logic_error(theorem + ": " + detail), theorem_(std::move(theorem)) {}

  const std::string& theorem() const noexcept { return theorem_; }

 private:
  std::string theorem_;
};

/// Closed-form spectrum requested for a shape no theorem covers.
class UnsupportedShape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace theta
