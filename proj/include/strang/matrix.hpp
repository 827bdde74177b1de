#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "strang/field.hpp"

namespace strang {

using Vec = std::vector<Elem>;

/// Dense row-major matrix of GF(2^e) elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(std::size_t n);
  /// Rows given as vectors of equal length `cols`.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  Elem* row(std::size_t r) noexcept { return data_.data() + r * cols_; }
  const Elem* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }
  Vec row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols_); }
  Vec col_vec(std::size_t c) const;

  const std::vector<Elem>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  Matrix transpose() const;
  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix mul(const Field& f, const Matrix& a, const Matrix& b);
Vec mul(const Field& f, const Matrix& a, std::span<const Elem> x);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, Elem c, const Matrix& a);
/// Block-diagonal sum.
Matrix diag(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix power(const Field& f, const Matrix& a, unsigned n);

/// dst += c * src over the whole vector.
void axpy(const Field& f, std::span<Elem> dst, Elem c, std::span<const Elem> src);

/// Reduced row echelon form. `pivots[r]` is the pivot column of row r < rank.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// In-place Gauss-Jordan; returns pivot columns. When `track` is non-null it receives
/// the same row operations (so track_out * m_in = rref).
std::vector<std::size_t> gauss_jordan(const Field& f, Matrix& m, Matrix* track = nullptr);

Echelon echelon(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);

/// Kernel basis (column vectors of length cols), returned in reduced echelon form.
std::vector<Vec> kernel(const Field& f, const Matrix& m);

struct RankKernel {
  std::size_t rank;
  std::vector<Vec> kernel;
};
RankKernel rank_and_kernel(const Field& f, const Matrix& m);

/// Echelon-canonical particular solution of m x = b (free variables set to 0).
std::optional<Vec> solve_linear(const Field& f, const Matrix& m, std::span<const Elem> b);

std::optional<Matrix> inverse(const Field& f, const Matrix& m);

/// Reduced echelon basis of the span of the given vectors (all of length n).
std::vector<Vec> span_basis(const Field& f, const std::vector<Vec>& vecs, std::size_t n);

/// Factorized system for repeated solves against one coefficient matrix.
class LinearSolver {
 public:
  LinearSolver(const Field& f, const Matrix& m);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  /// Same contract as solve_linear.
  std::optional<Vec> solve(std::span<const Elem> b) const;
  bool consistent(std::span<const Elem> b) const;

 private:
  Vec transform(std::span<const Elem> b) const;

  Field field_;
  std::size_t cols_;
  Matrix rref_;
  Matrix ops_;
  std::vector<std::size_t> pivots_;
};

}  // namespace strang
