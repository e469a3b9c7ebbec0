#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matchtime {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (empty input, bad range, ...).
class InvalidInput : public Error {
public:
  using Error::Error;
};

// A sequence is too short to contribute a matching-time sample (t < 2).
class SequenceTooShort : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

// A mathematical function was evaluated outside its domain.
class DomainError : public Error {
public:
  using Error::Error;
};

// A model or run configuration cannot be satisfied.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace matchtime
