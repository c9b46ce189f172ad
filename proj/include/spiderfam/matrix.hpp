// Dense matrices over Q and exact linear solving / rank.
//
// Elimination runs in two flavors: a serial reference kernel and an
// OpenMP-parallel kernel that distributes the row updates of each pivot
// step. Pivot selection is serial in both, so the two produce identical
// results; tests compare them and tools/bench_kernels times them.
#pragma once

#include <cstddef>
#include <vector>

#include "spiderfam/rational.hpp"

namespace spiderfam {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

std::vector<Rational> mat_vec(const Matrix& A, const std::vector<Rational>& x);

enum class SolveStatus { Unique, NoSolution, NonUnique };

struct LinearSolution {
  SolveStatus status = SolveStatus::Unique;
  std::vector<Rational> x;  // filled only when status == Unique
};

// Exact solution of A x = b. Distinguishes inconsistent systems
// (NoSolution) from consistent rank-deficient ones (NonUnique).
LinearSolution solve_linear(const Matrix& A, const std::vector<Rational>& b);

std::size_t rank(const Matrix& A);

namespace kernels {

// In-place forward elimination to row echelon form. Returns the pivot
// columns, one per pivot row. Pivots are chosen among the nonzero
// candidates of a column by minimal bit size, which keeps intermediate
// fractions small.
std::vector<std::size_t> echelon_serial(Matrix& m);
std::vector<std::size_t> echelon_parallel(Matrix& m);

// Dispatch: parallel kernel for matrices past a size threshold when
// OpenMP is enabled, serial reference otherwise.
std::vector<std::size_t> echelon(Matrix& m);

}  // namespace kernels

}  // namespace spiderfam
