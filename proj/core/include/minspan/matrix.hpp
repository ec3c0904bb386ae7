#ifndef MINSPAN_MATRIX_HPP
#define MINSPAN_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minspan/field.hpp"

namespace minspan {

/// Dense matrix over GF(p), row-major raw residues. Rows may be 0 (the basis
/// of a trivial space); columns must be >= 1. All entries share the one field
/// fixed at construction.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);  // zero-filled
  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::uint32_t>>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return f_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v);
  FieldElement at(std::size_t r, std::size_t c) const { return FieldElement(f_, (*this)(r, c)); }

  std::vector<std::uint32_t> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<std::uint32_t>& values);
  void append_row(const std::vector<std::uint32_t>& values);

  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, std::uint32_t factor);
  /// row[dst] += factor * row[src]
  void add_scaled_row(std::size_t dst, std::size_t src, std::uint32_t factor);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& o) const = default;

  /// Copy of the given columns, in the given order.
  Matrix columns(const std::vector<std::size_t>& cols) const;

 private:
  PrimeField f_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> e_;
};

struct RrefResult {
  Matrix reduced;                       // unique reduced row-echelon form, same shape
  std::size_t rank;                     // number of pivots
  std::vector<std::size_t> pivot_cols;  // strictly increasing
};

/// Reduced row-echelon form with leftmost-pivot, first-nonzero-row tie-breaking.
RrefResult rref(const Matrix& m);

std::size_t rank_of(const Matrix& m);

/// Basis of the right kernel {x : m x^T = 0}, returned as a
/// (cols - rank) x cols matrix with independent rows, ordered by free column.
/// Every returned row has zero inner product with every row of m.
Matrix kernel_basis(const Matrix& m);

/// Row spaces compared via their canonical rref.
bool row_space_equal(const Matrix& a, const Matrix& b);

/// Componentwise inner product of two equal-length residue vectors.
std::uint32_t inner_product(const PrimeField& f, const std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b);

}  // namespace minspan

#endif
