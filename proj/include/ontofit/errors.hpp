#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontofit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: mismatched arities, unknown names, empty lists.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  explicit ParseError(const std::string& message) : Error(message) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Symbols of arity > 2 handed to description logic code.
class DialectError : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A constructed witness failed its own verification.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ontofit
