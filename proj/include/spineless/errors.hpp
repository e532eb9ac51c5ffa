#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spineless {

// Base of everything the library throws on bad input or unsupported requests.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input. The CLI maps these to exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SymmetryViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class MonotonicityViolation : public InvalidInput {
 public:
  MonotonicityViolation(std::size_t index, const std::string& what)
      : InvalidInput(what), index_(index) {}

  // First index i at which V_i -> V_{i+1} breaks the step rule.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NotCoprime : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A request the engine deliberately refuses (no formula available).
class Unsupported : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The obstruction has nothing to say for this input (order n <= 1).
class Inapplicable : public Error {
 public:
  using Error::Error;
};

// Certified lattice search would exceed the configured budget.
class SearchOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace spineless
