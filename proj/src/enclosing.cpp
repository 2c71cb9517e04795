#include "divatlas/enclosing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace divatlas {

SubspaceBasis::SubspaceBasis(int ambient_dim, std::vector<Vector> vectors)
  : ambient_dim_(ambient_dim), vectors_(std::move(vectors))
{
  for (const auto& v : vectors_)
    if (static_cast<int>(v.size()) != ambient_dim_)
      throw std::invalid_argument("subspace vector of length " + std::to_string(v.size()) + " in Q^" +
                                  std::to_string(ambient_dim_));
  if (!vectors_.empty() && rank(Matrix::from_columns(ambient_dim_, vectors_)) != vectors_.size())
    throw std::invalid_argument("subspace basis vectors are linearly dependent");
}

Matrix contraction_matrix(const SkewTensor& t)
{
  const int n = t.n();
  const int k = t.k();
  if (k == 0) return Matrix(n, 0);
  Matrix m(n, static_cast<std::size_t>(binomial(n, k - 1)));
  for (const auto& [index, c] : t.terms()) {
    // each i in the support index contributes to column J = index \ {i}
    for (int p = 0; p < k; ++p) {
      Subset j;
      j.reserve(k - 1);
      for (int q = 0; q < k; ++q)
        if (q != p) j.push_back(index[q]);
      m(index[p], static_cast<std::size_t>(subset_rank(j, n))) = (p % 2 == 0) ? c : Rational(-c);
    }
  }
  return m;
}

Matrix contraction_matrix(const SymTensor& t)
{
  const int n = t.n();
  const int k = t.k();
  if (k == 0) return Matrix(n, 0);
  std::vector<Exponent> cols = all_exponents(n, k - 1);
  std::map<Exponent, std::size_t> col_of;
  for (std::size_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);

  Matrix m(n, cols.size());
  for (const auto& [alpha, c] : t.terms())
    for (int i = 0; i < n; ++i) {
      if (alpha[i] == 0) continue;
      Exponent lower(alpha);
      --lower[i];
      // (alpha'_i + 1) with alpha' = alpha - e_i
      m(i, col_of.at(lower)) = c * alpha[i];
    }
  return m;
}

Matrix contraction_matrix(const Tensor& t)
{
  return std::visit([](const auto& x) { return contraction_matrix(x); }, t);
}

SubspaceBasis enclosing_space(const Tensor& t)
{
  return SubspaceBasis(dimension_of(t), image_basis(contraction_matrix(t)));
}

int enc(const Tensor& t)
{
  return static_cast<int>(rank(contraction_matrix(t)));
}

bool is_in_power_of(const Tensor& t, const SubspaceBasis& w)
{
  const int n = dimension_of(t);
  if (w.ambient_dim() != n)
    throw std::invalid_argument("subspace of Q^" + std::to_string(w.ambient_dim()) + " tested against tensor over Q^" +
                                std::to_string(n));

  std::vector<Vector> basis = w.vectors();
  for (int i = 0; i < n && static_cast<int>(basis.size()) < n; ++i) {
    Vector e(n);
    e[i] = 1;
    if (!in_span(e, basis)) basis.push_back(std::move(e));
  }
  Matrix change = inverse(Matrix::from_columns(n, basis));
  // only vanishing is tested, so an integral rescaling is harmless
  Integer denom = 1;
  for (std::size_t i = 0; i < change.rows(); ++i)
    for (std::size_t j = 0; j < change.cols(); ++j) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), change(i, j).get_den_mpz_t());
  for (std::size_t i = 0; i < change.rows(); ++i)
    for (std::size_t j = 0; j < change.cols(); ++j) change(i, j) *= denom;
  Tensor rewritten = apply_linear_map(t, change);

  const int wdim = w.dim();
  if (const auto* s = std::get_if<SkewTensor>(&rewritten)) {
    for (const auto& [index, c] : s->terms())
      if (!index.empty() && index.back() >= wdim) return false;
    return true;
  }
  for (const auto& [alpha, c] : std::get<SymTensor>(rewritten).terms())
    for (int j = wdim; j < n; ++j)
      if (alpha[j] != 0) return false;
  return true;
}

} // namespace divatlas
