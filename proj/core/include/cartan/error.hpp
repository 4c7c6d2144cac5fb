#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartan {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation left the domain of an operation (x/0, log of x <= 0, ...).
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different variable lists or have incompatible shapes.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// A sampling-based decision could not be made because every sample point
/// was excluded or singular.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// A numerical integrand hit (or came too close to) a singular set.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& message, std::vector<double> where)
      : Error(message), where_(std::move(where)) {}

  /// Parameter values (or the minimum distance) that triggered the error.
  const std::vector<double>& where() const noexcept { return where_; }

 private:
  std::vector<double> where_;
};

}  // namespace cartan
