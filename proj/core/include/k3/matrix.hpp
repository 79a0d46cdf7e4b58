#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "k3/errors.hpp"
#include "k3/scalar.hpp"

namespace k3 {

/// Dense row-major matrix over an exact ring.
template <class C>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const C& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  C& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const C& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<C> data_;
};

/// Fraction-free (Bareiss) determinant over an integral domain.
///
/// Every division is exact; a zero pivot is replaced by a later row and the
/// sign tracked.
template <class C>
C bareiss_determinant(Matrix<C> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) throw PreconditionError("determinant of an empty matrix");
  C previous = int_like(m(0, 0), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return int_like(m(0, 0), 0);
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      }
    }
    previous = m(k, k);
  }
  C det = m(n - 1, n - 1);
  if (negate) det = int_like(det, 0) - det;
  return det;
}

/// Determinant of a scalar matrix: Bareiss over Z and Q, Gaussian elimination over F_p.
Scalar determinant(const Matrix<Scalar>& m);

/// Bareiss on raw GMP integers.
mpz_class integer_determinant(std::vector<mpz_class> entries, std::size_t n);

/// Gaussian elimination modulo p on an n x n row-major matrix of residues.
std::uint64_t determinant_mod_p(std::vector<std::uint64_t> entries, std::size_t n,
                                std::uint64_t p);

/// Rank modulo p of a rows x cols row-major matrix of residues.
std::size_t rank_mod_p(std::vector<std::uint64_t> entries, std::size_t rows, std::size_t cols,
                       std::uint64_t p);

/// Exact rank over Q of an integer matrix by fraction-free elimination.
std::size_t integer_rank(std::vector<mpz_class> entries, std::size_t rows, std::size_t cols);

}  // namespace k3
