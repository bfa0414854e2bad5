#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conesing {

/// Categories used by the CLI and the regression runner to assert on failures.
enum class ErrorKind {
  InvalidInput,
  SingularMatrix,
  NotLogFano,
  NotContractible,
  NotIsolated,
};

/// Stable machine-readable name, e.g. "NOT_ISOLATED".
std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message)
      : Error(ErrorKind::InvalidInput, message) {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t rank, std::size_t size);

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// The log Fano quotient inequalities fail; the cone is not klt.
class NotLogFano : public Error {
 public:
  explicit NotLogFano(const std::string& message)
      : Error(ErrorKind::NotLogFano, message) {}
};

class NotContractible : public Error {
 public:
  explicit NotContractible(const std::string& message)
      : Error(ErrorKind::NotContractible, message) {}
};

/// Jacobian quotient is infinite-dimensional or not supported at the origin.
class NotIsolated : public Error {
 public:
  explicit NotIsolated(const std::string& message)
      : Error(ErrorKind::NotIsolated, message) {}
};

}  // namespace conesing
