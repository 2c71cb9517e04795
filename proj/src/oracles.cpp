#include "divatlas/oracles.hpp"

#include "divatlas/subspace_geometry.hpp"

#include <stdexcept>

namespace divatlas::oracle {

std::size_t naive_rank(const Matrix& m)
{
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Matrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t max_rank, Sampler& sampler)
{
  Matrix left = sampler.matrix(rows, max_rank);
  Matrix right = sampler.matrix(max_rank, cols);
  return left * right;
}

SubspaceBasis random_hyperplane(const SubspaceBasis& w, Sampler& sampler)
{
  if (w.dim() < 1) throw std::invalid_argument("hyperplane of the zero subspace");
  const int n = w.ambient_dim();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vector> vs;
    for (int i = 0; i + 1 < w.dim(); ++i) {
      Vector v(n);
      for (const auto& b : w.vectors()) {
        Rational c = sampler.small_int();
        for (int x = 0; x < n; ++x) v[x] += c * b[x];
      }
      vs.push_back(std::move(v));
    }
    if (vs.empty() || rank(Matrix::from_columns(n, vs)) == vs.size()) return SubspaceBasis(n, std::move(vs));
  }
  throw std::runtime_error("failed to sample a hyperplane");
}

SubspaceBasis random_subspace(int n, int m, Sampler& sampler)
{
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vector> vs;
    for (int i = 0; i < m; ++i) vs.push_back(sampler.vector(n));
    if (m == 0 || rank(Matrix::from_columns(n, vs)) == static_cast<std::size_t>(m))
      return SubspaceBasis(n, std::move(vs));
  }
  throw std::runtime_error("failed to sample a subspace");
}

Tensor tensor_with_enc(int n, int k, int m, TensorKind kind, Sampler& sampler)
{
  if (m > n) throw std::invalid_argument("tensor_with_enc: m > n");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Tensor small = random_tensor(m, k, kind, sampler.raw());
    if (enc(small) != m) continue;
    Matrix inject = sampler.matrix(n, m);
    if (rank(inject) != static_cast<std::size_t>(m)) continue;
    return apply_linear_map(small, inject);
  }
  throw std::runtime_error("failed to sample a tensor with the requested enclosing dimension");
}

bool lies_in_some_power(const Tensor& t, int target, int trials, Sampler& sampler)
{
  const int n = dimension_of(t);
  if (target < 0 || target > n) throw std::invalid_argument("lies_in_some_power: target outside [0, n]");
  SubspaceBasis enclosing = enclosing_space(t);
  if (enclosing.dim() <= target) {
    std::vector<Vector> vs = enclosing.vectors();
    while (static_cast<int>(vs.size()) < target) {
      Vector v = sampler.vector(n);
      vs.push_back(v);
      if (rank(Matrix::from_columns(n, vs)) != vs.size()) vs.pop_back();
    }
    if (is_in_power_of(t, SubspaceBasis(n, vs))) return true;
  }
  for (int i = 0; i < trials; ++i)
    if (is_in_power_of(t, random_subspace(n, target, sampler))) return true;
  return false;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt)
{
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace divatlas::oracle
