#pragma once

#include "conesing/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace conesing {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> entries() const { return entries_; }

  std::vector<Rational> multiply(std::span<const Rational> x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Exact Gaussian elimination. The result is re-checked against M x = rhs.
/// Throws SingularMatrix (carrying the rank) when M is not invertible.
std::vector<Rational> solve_linear(const RationalMatrix& m, std::span<const Rational> rhs);

/// Rank by exact elimination.
std::size_t rank(const RationalMatrix& m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Sylvester criterion: (-1)^k times the k-th leading minor is positive for all k.
/// Throws InvalidInput for non-square or non-symmetric input.
bool is_negative_definite(const RationalMatrix& m);

}  // namespace conesing
