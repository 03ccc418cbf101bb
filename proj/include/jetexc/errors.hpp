#pragma once

#include <stdexcept>
#include <string>

namespace jetexc {

/// A configured step or degree budget was exceeded; the instance is too large
/// for the current limits.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Malformed text input. `where` names the field or offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what) {}
};

/// Input outside the mathematical contract of an operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jetexc
