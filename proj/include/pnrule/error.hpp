#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pnrule {

/// Base of every error raised by the library. Subclasses distinguish input
/// problems (a file or argument the user can fix) from internal failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value, parameter set or knowledge base that violates a documented
/// invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Carries the 1-based line where parsing failed
/// (0 when the location is unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pnrule
