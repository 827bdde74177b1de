#include "strang/matrix.hpp"

#include <algorithm>
#include <utility>

#include "strang/kernels.hpp"

namespace strang {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error("shape", "matrix data has wrong length");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("shape", "ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r));
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("shape", "ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) std::copy_n(row(r0 + r) + c0, nc, b.row(r));
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::copy_n(m.row(r), m.cols(), row(r0 + r) + c0);
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) std::copy_n(row(idx[i]), cols_, out.row(i));
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix out(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) out(r, i) = (*this)(r, idx[i]);
  return out;
}

void axpy(const Field& f, std::span<Elem> dst, Elem c, std::span<const Elem> src) {
  if (c == 0 || dst.empty()) return;
  if (c == 1) {
    kernels::active().add(dst.data(), src.data(), dst.size());
  } else {
    kernels::active().axpy(dst.data(), src.data(), dst.size(), f.nibbles(c));
  }
}

Matrix mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("shape", "product of incompatible matrices");
  Matrix out(a.rows(), b.cols());
  if (b.cols() == 0) return out;
  const auto& ops = kernels::active();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem* dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem c = a(i, k);
      if (c == 0) continue;
      if (c == 1) {
        ops.add(dst, b.row(k), b.cols());
      } else {
        ops.axpy(dst, b.row(k), b.cols(), f.nibbles(c));
      }
    }
  }
  return out;
}

Vec mul(const Field& f, const Matrix& a, std::span<const Elem> x) {
  if (a.cols() != x.size()) throw Error("shape", "matrix-vector size mismatch");
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc = 0;
    const Elem* r = a.row(i);
    for (std::size_t k = 0; k < x.size(); ++k) acc ^= f.mul(r[k], x[k]);
    out[i] = acc;
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("shape", "sum of incompatible matrices");
  Matrix out = a;
  if (!out.data().empty()) kernels::active().add(out.row(0), b.row(0), a.rows() * a.cols());
  return out;
}

Matrix scale(const Field& f, Elem c, const Matrix& a) {
  Matrix out = a;
  if (c != 1 && !out.data().empty()) kernels::active().scale(out.row(0), a.rows() * a.cols(), f.nibbles(c));
  return out;
}

Matrix diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("shape", "hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("shape", "vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix power(const Field& f, const Matrix& a, unsigned n) {
  Matrix acc = Matrix::identity(a.rows());
  for (unsigned i = 0; i < n; ++i) acc = mul(f, acc, a);
  return acc;
}

std::vector<std::size_t> gauss_jordan(const Field& f, Matrix& m, Matrix* track) {
  const auto& ops = kernels::active();
  std::vector<std::size_t> pivots;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  const std::size_t tc = track ? track->cols() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m(p, c) == 0) ++p;
    if (p == nr) continue;
    if (p != r) {
      std::swap_ranges(m.row(p), m.row(p) + nc, m.row(r));
      if (track) std::swap_ranges(track->row(p), track->row(p) + tc, track->row(r));
    }
    const Elem pv = m(r, c);
    if (pv != 1) {
      const auto& inv = f.nibbles(f.inv(pv));
      ops.scale(m.row(r) + c, nc - c, inv);
      if (track) ops.scale(track->row(r), tc, inv);
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      const Elem x = m(i, c);
      if (x == 0) continue;
      if (x == 1) {
        ops.add(m.row(i) + c, m.row(r) + c, nc - c);
        if (track) ops.add(track->row(i), track->row(r), tc);
      } else {
        const auto& t = f.nibbles(x);
        ops.axpy(m.row(i) + c, m.row(r) + c, nc - c, t);
        if (track) ops.axpy(track->row(i), track->row(r), tc, t);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Echelon echelon(const Field& f, Matrix m) {
  auto piv = gauss_jordan(f, m);
  return {std::move(m), std::move(piv)};
}

std::size_t rank(const Field& f, const Matrix& m) {
  Matrix copy = m;
  return gauss_jordan(f, copy).size();
}

namespace {

std::vector<Vec> kernel_from_rref(const Matrix& rref, const std::vector<std::size_t>& pivots) {
  const std::size_t nc = rref.cols();
  std::vector<char> is_pivot(nc, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    Vec v(nc, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = rref(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vec> span_basis(const Field& f, const std::vector<Vec>& vecs, std::size_t n) {
  if (vecs.empty()) return {};
  Matrix m = Matrix::from_rows(vecs, n);
  const auto piv = gauss_jordan(f, m);
  std::vector<Vec> out;
  out.reserve(piv.size());
  for (std::size_t r = 0; r < piv.size(); ++r) out.push_back(m.row_vec(r));
  return out;
}

RankKernel rank_and_kernel(const Field& f, const Matrix& m) {
  Matrix work = m;
  const auto piv = gauss_jordan(f, work);
  auto ker = kernel_from_rref(work, piv);
  return {piv.size(), span_basis(f, ker, m.cols())};
}

std::vector<Vec> kernel(const Field& f, const Matrix& m) { return rank_and_kernel(f, m).kernel; }

std::optional<Vec> solve_linear(const Field& f, const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw Error("shape", "right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];
  const auto piv = gauss_jordan(f, aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Matrix work = m;
  Matrix inv = Matrix::identity(m.rows());
  const auto piv = gauss_jordan(f, work, &inv);
  if (piv.size() != m.rows()) return std::nullopt;
  return inv;
}

LinearSolver::LinearSolver(const Field& f, const Matrix& m)
    : field_(f), cols_(m.cols()), rref_(m), ops_(Matrix::identity(m.rows())) {
  pivots_ = gauss_jordan(field_, rref_, &ops_);
}

Vec LinearSolver::transform(std::span<const Elem> b) const {
  if (b.size() != ops_.cols()) throw Error("shape", "right-hand side has wrong length");
  return mul(field_, ops_, b);
}

bool LinearSolver::consistent(std::span<const Elem> b) const {
  const Vec eb = transform(b);
  for (std::size_t r = pivots_.size(); r < eb.size(); ++r)
    if (eb[r] != 0) return false;
  return true;
}

std::optional<Vec> LinearSolver::solve(std::span<const Elem> b) const {
  const Vec eb = transform(b);
  for (std::size_t r = pivots_.size(); r < eb.size(); ++r)
    if (eb[r] != 0) return std::nullopt;
  Vec x(cols_, 0);
  for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = eb[r];
  return x;
}

}  // namespace strang
