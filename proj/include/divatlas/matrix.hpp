#pragma once

#include "divatlas/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <tuple>
#include <vector>

namespace divatlas {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  /// Builds a rows x cols matrix from (row, col, value) triples; unlisted
  /// entries are zero. Throws std::out_of_range for an index outside the bounds.
  static Matrix from_entries(std::size_t rows, std::size_t cols,
                             std::span<const std::tuple<std::size_t, std::size_t, Rational>> entries);
  /// Each vector becomes one column; all must share the same length `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Bounds-checked access.
  const Rational& at(std::size_t r, std::size_t c) const;

  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Exact rank by fraction-free (Bareiss) elimination. Rows are cleared of
/// denominators first, so all elimination runs over the integers.
std::size_t rank(const Matrix& m);

/// Column indices of the pivots of the row echelon form, in increasing order.
std::vector<std::size_t> pivot_columns(const Matrix& m);

/// The pivot columns of `m` themselves: a basis of its column space.
std::vector<Vector> image_basis(const Matrix& m);

/// True iff v lies in span(basis). Throws std::invalid_argument when some
/// basis vector has a different length from v.
bool in_span(std::span<const Rational> v, std::span<const Vector> basis);

Rational determinant(const Matrix& m);

/// Gauss-Jordan inverse. Throws std::domain_error for singular input.
Matrix inverse(const Matrix& m);

} // namespace divatlas
