#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparking {

/// A caller passed a value outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem hypothesis does not hold for the supplied instance.
class PreconditionFailure : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A bijection was run on an input that is not a member of its domain.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sparking
