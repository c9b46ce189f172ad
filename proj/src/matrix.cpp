#include "spiderfam/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace spiderfam {

std::vector<Rational> mat_vec(const Matrix& A, const std::vector<Rational>& x) {
  if (x.size() != A.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Rational> y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (!A(i, j).is_zero() && !x[j].is_zero()) acc += A(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

namespace kernels {
namespace {

// Pick the nonzero entry of column `col` among rows [from, rows) with the
// smallest bit size. Returns rows() when the column is all zero.
std::size_t pick_pivot(const Matrix& m, std::size_t from, std::size_t col) {
  std::size_t best = m.rows();
  std::size_t best_bits = 0;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m(r, col).is_zero()) continue;
    const std::size_t bits = m(r, col).bit_size();
    if (best == m.rows() || bits < best_bits) {
      best = r;
      best_bits = bits;
    }
  }
  return best;
}

void eliminate_row(Matrix& m, std::size_t row, std::size_t pivot_row, std::size_t col) {
  if (m(row, col).is_zero()) return;
  const Rational factor = m(row, col) / m(pivot_row, col);
  m(row, col) = Rational(0);
  mpq_class tmp;
  for (std::size_t j = col + 1; j < m.cols(); ++j) {
    if (m(pivot_row, j).is_zero()) continue;
    mpq_mul(tmp.get_mpq_t(), factor.raw().get_mpq_t(), m(pivot_row, j).raw().get_mpq_t());
    mpq_sub(m(row, j).raw().get_mpq_t(), m(row, j).raw().get_mpq_t(), tmp.get_mpq_t());
  }
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <bool Parallel>
std::vector<std::size_t> echelon_impl(Matrix& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    const std::size_t piv = pick_pivot(m, row, col);
    if (piv == m.rows()) continue;
    swap_rows(m, row, piv);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::size_t r = row + 1; r < m.rows(); ++r) eliminate_row(m, r, row, col);
    } else {
      for (std::size_t r = row + 1; r < m.rows(); ++r) eliminate_row(m, r, row, col);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

constexpr std::size_t kParallelRowThreshold = 24;

}  // namespace

std::vector<std::size_t> echelon_serial(Matrix& m) { return echelon_impl<false>(m); }

std::vector<std::size_t> echelon_parallel(Matrix& m) { return echelon_impl<true>(m); }

std::vector<std::size_t> echelon(Matrix& m) {
#ifdef _OPENMP
  if (m.rows() >= kParallelRowThreshold) return echelon_parallel(m);
#endif
  return echelon_serial(m);
}

}  // namespace kernels

std::size_t rank(const Matrix& A) {
  Matrix work = A;
  return kernels::echelon(work).size();
}

LinearSolution solve_linear(const Matrix& A, const std::vector<Rational>& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const std::size_t n = A.cols();
  Matrix aug(A.rows(), n + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n) = b[i];
  }

  const auto pivot_cols = kernels::echelon(aug);

  LinearSolution out;
  if (!pivot_cols.empty() && pivot_cols.back() == n) {
    out.status = SolveStatus::NoSolution;  // a pivot landed in the b column
    return out;
  }
  if (pivot_cols.size() < n) {
    out.status = SolveStatus::NonUnique;
    return out;
  }

  // rank == n and consistent: back-substitute. Pivot row i has pivot in
  // column i (all n columns are pivots).
  out.x.assign(n, Rational(0));
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = aug(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (!aug(ii, j).is_zero()) acc -= aug(ii, j) * out.x[j];
    }
    out.x[ii] = acc / aug(ii, ii);
  }
  return out;
}

}  // namespace spiderfam
