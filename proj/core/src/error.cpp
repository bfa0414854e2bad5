#include "conesing/error.hpp"

namespace conesing {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return "INVALID_INPUT";
    case ErrorKind::SingularMatrix:
      return "SINGULAR_MATRIX";
    case ErrorKind::NotLogFano:
      return "NOT_LOG_FANO";
    case ErrorKind::NotContractible:
      return "NOT_CONTRACTIBLE";
    case ErrorKind::NotIsolated:
      return "NOT_ISOLATED";
  }
  return "UNKNOWN";
}

SingularMatrix::SingularMatrix(std::size_t rank, std::size_t size)
    : Error(ErrorKind::SingularMatrix, "singular matrix: rank " + std::to_string(rank) +
                                           " of " + std::to_string(size)),
      rank_(rank) {}

}  // namespace conesing
