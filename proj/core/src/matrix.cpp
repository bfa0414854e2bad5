#include "conesing/matrix.hpp"

#include "conesing/error.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace conesing {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InvalidInput("matrix entry count does not match its shape");
  }
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (!a.is_zero() && !x[j].is_zero()) acc += a * x[j];
    }
    out[i] = acc;
  }
  return out;
}

namespace {

// Row with the largest |numerator| among non-zero entries of column `col`, at or below `from`.
std::optional<std::size_t> pick_pivot(const RationalMatrix& m, std::size_t col, std::size_t from) {
  std::optional<std::size_t> best;
  BigInt best_size;
  for (std::size_t r = from; r < m.rows(); ++r) {
    const Rational& v = m(r, col);
    if (v.is_zero()) continue;
    const BigInt size = abs(v.numerator());
    if (!best || size > best_size) {
      best = r;
      best_size = size;
    }
  }
  return best;
}

void swap_rows(RationalMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Reduces `m` to row echelon form in place and returns the rank.
std::size_t echelon(RationalMatrix& m, std::size_t pivot_cols) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    const auto pivot = pick_pivot(m, col, row);
    if (!pivot) continue;
    swap_rows(m, row, *pivot);
    const Rational inv = m(row, col).reciprocal();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational factor = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return echelon(work, work.cols());
}

std::vector<Rational> solve_linear(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (!m.is_square()) throw InvalidInput("solve_linear needs a square matrix");
  if (rhs.size() != m.rows()) throw InvalidInput("right-hand side has the wrong length");
  const std::size_t n = m.rows();

  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  const std::size_t r = echelon(aug, n);
  if (r < n) throw SingularMatrix(r, n);

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!aug(i, j).is_zero()) acc -= aug(i, j) * x[j];
    }
    x[i] = acc / aug(i, i);
  }

  const auto check = m.multiply(x);
  if (!std::equal(check.begin(), check.end(), rhs.begin())) {
    throw std::logic_error("solve_linear: M x != rhs after elimination");
  }
  return x;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidInput("leading minors need a square matrix");
  std::vector<Rational> minors;
  minors.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    }
    // Determinant by elimination, tracking row swaps.
    Rational det(1);
    for (std::size_t col = 0; col < k; ++col) {
      const auto pivot = pick_pivot(sub, col, col);
      if (!pivot) {
        det = Rational(0);
        break;
      }
      if (*pivot != col) {
        swap_rows(sub, col, *pivot);
        det = -det;
      }
      det *= sub(col, col);
      const Rational inv = sub(col, col).reciprocal();
      for (std::size_t r = col + 1; r < k; ++r) {
        if (sub(r, col).is_zero()) continue;
        const Rational factor = sub(r, col) * inv;
        for (std::size_t c = col; c < k; ++c) sub(r, c) -= factor * sub(col, c);
      }
    }
    minors.push_back(det);
  }
  return minors;
}

bool is_negative_definite(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidInput("definiteness needs a square matrix");
  if (!m.is_symmetric()) throw InvalidInput("definiteness needs a symmetric matrix");
  // Without row exchanges the k-th pivot is minor_k / minor_{k-1}; the minors alternate
  // in sign starting negative iff every pivot is negative.
  RationalMatrix work = m;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (work(k, k).sign() >= 0) return false;
    const Rational inv = work(k, k).reciprocal();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (work(r, k).is_zero()) continue;
      const Rational factor = work(r, k) * inv;
      for (std::size_t c = k; c < n; ++c) {
        if (!work(k, c).is_zero()) work(r, c) -= factor * work(k, c);
      }
    }
  }
  return true;
}

}  // namespace conesing
