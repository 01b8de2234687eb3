#pragma once

#include <stdexcept>
#include <string>

namespace dsh {

/// Evaluation requested outside a function's domain (poles, light-cone
/// violations, arguments off the principal branch).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A series or iteration failed to converge within its term cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// An adaptive quadrature could not reach its tolerance; the message names
/// the offending sub-integral.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dsh
