#include "minspan/matrix.hpp"

#include <stdexcept>
#include <string>

namespace minspan {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : f_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {
  if (cols == 0) throw std::invalid_argument("matrix must have at least one column");
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::uint32_t>>& rows,
                         std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, std::uint32_t v) {
  if (v >= f_.modulus())
    throw std::invalid_argument("entry " + std::to_string(v) + " out of range for GF(" +
                                std::to_string(f_.modulus()) + ")");
  e_[r * cols_ + c] = v;
}

std::vector<std::uint32_t> Matrix::row(std::size_t r) const {
  return {e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_};
}

void Matrix::set_row(std::size_t r, const std::vector<std::uint32_t>& values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, values[c]);
}

void Matrix::append_row(const std::vector<std::uint32_t>& values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c)
    if (values[c] >= f_.modulus()) throw std::invalid_argument("entry out of range");
  e_.insert(e_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(e_[a * cols_ + c], e_[b * cols_ + c]);
}

void Matrix::scale_row(std::size_t r, std::uint32_t factor) {
  for (std::size_t c = 0; c < cols_; ++c) e_[r * cols_ + c] = f_.mul(e_[r * cols_ + c], factor);
}

void Matrix::add_scaled_row(std::size_t dst, std::size_t src, std::uint32_t factor) {
  for (std::size_t c = 0; c < cols_; ++c)
    e_[dst * cols_ + c] = f_.add(e_[dst * cols_ + c], f_.mul(e_[src * cols_ + c], factor));
}

Matrix Matrix::transpose() const {
  if (rows_ == 0) throw std::invalid_argument("cannot transpose a 0-row matrix");
  Matrix t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  if (!(f_ == rhs.f_)) throw std::invalid_argument("mixed-field matrix product");
  Matrix out(f_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t v = (*this)(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out.e_[r * rhs.cols_ + c] = f_.add(out.e_[r * rhs.cols_ + c], f_.mul(v, rhs(k, c)));
    }
  return out;
}

Matrix Matrix::columns(const std::vector<std::size_t>& cols) const {
  Matrix out(f_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.set(r, c, (*this)(r, cols[c]));
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  const PrimeField& f = r.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    r.swap_rows(pivot_row, sel);
    r.scale_row(pivot_row, f.inv(r(pivot_row, col)));
    for (std::size_t other = 0; other < r.rows(); ++other) {
      if (other == pivot_row || r(other, col) == 0) continue;
      r.add_scaled_row(other, pivot_row, f.neg(r(other, col)));
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  Matrix out(m.field(), m.cols() - rr.rank, m.cols());
  const PrimeField& f = m.field();
  std::size_t out_row = 0;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    out.set(out_row, free_col, 1);
    for (std::size_t i = 0; i < rr.rank; ++i)
      out.set(out_row, rr.pivot_cols[i], f.neg(rr.reduced(i, free_col)));
    ++out_row;
  }
  return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || !(a.field() == b.field())) return false;
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t r = 0; r < ra.rank; ++r)
    if (ra.reduced.row(r) != rb.reduced.row(r)) return false;
  return true;
}

std::uint32_t inner_product(const PrimeField& f, const std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product length mismatch");
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

}  // namespace minspan
