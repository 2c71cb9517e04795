#include "divatlas/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace divatlas {

Matrix::Matrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), data_(rows * cols)
{
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::from_entries(std::size_t rows, std::size_t cols,
                            std::span<const std::tuple<std::size_t, std::size_t, Rational>> entries)
{
  Matrix m(rows, cols);
  for (const auto& [r, c, value] : entries) {
    if (r >= rows || c >= cols)
      throw std::out_of_range("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    m(r, c) = value;
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns)
{
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const Rational& Matrix::at(std::size_t r, std::size_t c) const
{
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(r, c);
}

Vector Matrix::column(std::size_t c) const
{
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const
{
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const
{
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (sgn(a(i, l)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

namespace {

struct Echelon {
  std::vector<std::size_t> pivots;
  Integer last_pivot = 1;
  int swap_sign = 1;
};

// Integer matrix with every row of `m` multiplied by the lcm of its
// denominators; `scale` accumulates the product of those multipliers.
std::vector<std::vector<Integer>> clear_denominators(const Matrix& m, Integer* scale)
{
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    if (scale) *scale *= l;
  }
  return a;
}

Echelon bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols)
{
  Echelon out;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.swap_sign = -out.swap_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  out.last_pivot = prev;
  return out;
}

} // namespace

std::vector<std::size_t> pivot_columns(const Matrix& m)
{
  auto a = clear_denominators(m, nullptr);
  return bareiss(a, m.cols()).pivots;
}

std::size_t rank(const Matrix& m)
{
  return pivot_columns(m).size();
}

std::vector<Vector> image_basis(const Matrix& m)
{
  std::vector<Vector> basis;
  for (std::size_t c : pivot_columns(m)) basis.push_back(m.column(c));
  return basis;
}

bool in_span(std::span<const Rational> v, std::span<const Vector> basis)
{
  for (const auto& b : basis)
    if (b.size() != v.size())
      throw std::invalid_argument("in_span: vector of length " + std::to_string(b.size()) +
                                  " against target of length " + std::to_string(v.size()));
  if (basis.empty()) {
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }
  Matrix b = Matrix::from_columns(v.size(), basis);
  std::vector<Vector> extended(basis.begin(), basis.end());
  extended.emplace_back(v.begin(), v.end());
  return rank(b) == rank(Matrix::from_columns(v.size(), extended));
}

Rational determinant(const Matrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Integer scale;
  auto a = clear_denominators(m, &scale);
  Echelon e = bareiss(a, m.cols());
  if (e.pivots.size() < m.rows()) return 0;
  Rational det(e.last_pivot * e.swap_sign, scale);
  det.canonicalize();
  return det;
}

Matrix inverse(const Matrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw std::domain_error("inverse of singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

} // namespace divatlas
