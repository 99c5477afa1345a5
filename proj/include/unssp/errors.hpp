#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unssp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph file. Carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a single line, e.g. a missing header).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Bad user input: lambda spec, epsilon, k out of range, negative weights where
/// the algorithm requires non-negative ones, etc.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine refused to run because the instance is too large.
class SizeGateError : public Error {
 public:
  using Error::Error;
};

/// 64-bit accumulation of costs or objective values overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an API precondition (double mask push, pop of a present arc).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unssp
