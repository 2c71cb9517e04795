#include "divatlas/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace divatlas {

std::string_view to_string(TensorKind kind)
{
  return kind == TensorKind::skew ? "skew" : "sym";
}

TensorKind parse_tensor_kind(std::string_view text)
{
  if (text == "skew") return TensorKind::skew;
  if (text == "sym") return TensorKind::sym;
  throw std::invalid_argument("unknown tensor kind '" + std::string(text) + "' (expected skew or sym)");
}

// ---------------------------------------------------------------- SkewTensor

SkewTensor::SkewTensor(int n, int k) : n_(n), k_(k)
{
  if (n < 0 || k < 0) throw std::invalid_argument("tensor dimensions must be nonnegative");
}

void SkewTensor::check_index(const Subset& index) const
{
  if (static_cast<int>(index.size()) != k_)
    throw std::invalid_argument("skew index must have exactly k = " + std::to_string(k_) + " entries");
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] < 0 || index[i] >= n_) throw std::invalid_argument("skew index entry out of range");
    if (i > 0 && index[i] <= index[i - 1]) throw std::invalid_argument("skew index must be strictly increasing");
  }
}

void SkewTensor::set(const Subset& index, const Rational& value)
{
  check_index(index);
  if (sgn(value) == 0)
    terms_.erase(index);
  else
    terms_[index] = value;
}

void SkewTensor::add(const Subset& index, const Rational& value)
{
  check_index(index);
  if (sgn(value) == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational SkewTensor::coeff(const Subset& index) const
{
  check_index(index);
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

SkewTensor& SkewTensor::operator+=(const SkewTensor& other)
{
  if (other.n_ != n_ || other.k_ != k_) throw std::invalid_argument("adding skew tensors of different shape");
  for (const auto& [index, c] : other.terms_) add(index, c);
  return *this;
}

SkewTensor& SkewTensor::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, value] : terms_) value *= c;
  return *this;
}

// ----------------------------------------------------------------- SymTensor

SymTensor::SymTensor(int n, int k) : n_(n), k_(k)
{
  if (n < 0 || k < 0) throw std::invalid_argument("tensor dimensions must be nonnegative");
}

void SymTensor::check_index(const Exponent& alpha) const
{
  if (static_cast<int>(alpha.size()) != n_)
    throw std::invalid_argument("exponent vector must have length n = " + std::to_string(n_));
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("exponent entries must be nonnegative");
    total += a;
  }
  if (total != k_) throw std::invalid_argument("exponent vector must sum to k = " + std::to_string(k_));
}

void SymTensor::set(const Exponent& alpha, const Rational& value)
{
  check_index(alpha);
  if (sgn(value) == 0)
    terms_.erase(alpha);
  else
    terms_[alpha] = value;
}

void SymTensor::add(const Exponent& alpha, const Rational& value)
{
  check_index(alpha);
  if (sgn(value) == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational SymTensor::coeff(const Exponent& alpha) const
{
  check_index(alpha);
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymTensor& SymTensor::operator+=(const SymTensor& other)
{
  if (other.n_ != n_ || other.k_ != k_) throw std::invalid_argument("adding symmetric tensors of different shape");
  for (const auto& [alpha, c] : other.terms_) add(alpha, c);
  return *this;
}

SymTensor& SymTensor::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, value] : terms_) value *= c;
  return *this;
}

int dimension_of(const Tensor& t)
{
  return std::visit([](const auto& x) { return x.n(); }, t);
}

int degree_of(const Tensor& t)
{
  return std::visit([](const auto& x) { return x.k(); }, t);
}

// -------------------------------------------------------------- constructors

SkewTensor wedge(int n, std::span<const Vector> vectors)
{
  const int k = static_cast<int>(vectors.size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("wedge: vector length differs from n");
  SkewTensor out(n, k);
  for (const auto& rows : all_subsets(n, k)) {
    Matrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = vectors[j][rows[i]];
    out.set(rows, determinant(minor));
  }
  return out;
}

SymTensor linear_form(std::span<const Rational> v)
{
  const int n = static_cast<int>(v.size());
  SymTensor out(n, 1);
  for (int i = 0; i < n; ++i) {
    Exponent alpha(n, 0);
    alpha[i] = 1;
    out.set(alpha, v[i]);
  }
  return out;
}

SymTensor sym_product(const SymTensor& a, const SymTensor& b)
{
  if (a.n() != b.n()) throw std::invalid_argument("sym_product: tensors over different spaces");
  SymTensor out(a.n(), a.k() + b.k());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      Exponent z(x);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
      out.add(z, cx * cy);
    }
  return out;
}

SymTensor sym_power(std::span<const Rational> v, int k)
{
  if (k < 0) throw std::invalid_argument("sym_power: negative degree");
  const int n = static_cast<int>(v.size());
  SymTensor out(n, k);
  for (const auto& alpha : all_exponents(n, k)) {
    Rational c = static_cast<long>(multinomial(alpha));
    for (int i = 0; i < n && sgn(c) != 0; ++i) {
      Rational p = 1;
      for (int e = 0; e < alpha[i]; ++e) p *= v[i];
      c *= p;
    }
    out.set(alpha, c);
  }
  return out;
}

// ------------------------------------------------------- linear map actions

namespace {

// Full (unsymmetrized) k-fold tensor with per-slot dimensions, row-major.
// Entries are integers; the represented tensor is data / denom.
struct DenseTensor {
  std::vector<int> dims;
  std::vector<Integer> data;
  Integer denom = 1;

  std::size_t offset(const std::vector<int>& idx) const
  {
    std::size_t off = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) off = off * dims[s] + idx[s];
    return off;
  }

  Rational at(const std::vector<int>& idx) const
  {
    Rational x(data[offset(idx)], denom);
    x.canonicalize();
    return x;
  }
};

template <class Terms>
Integer common_denominator(const Terms& terms)
{
  Integer l = 1;
  for (const auto& [index, c] : terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

DenseTensor make_dense(int n, int k)
{
  DenseTensor t;
  t.dims.assign(k, n);
  std::size_t size = 1;
  for (int s = 0; s < k; ++s) size *= static_cast<std::size_t>(n);
  t.data.assign(size, Integer(0));
  return t;
}

// `map` is the integer matrix `scale * original`.
void apply_to_slot(DenseTensor& t, std::size_t slot, const std::vector<Integer>& map, std::size_t m,
                   const Integer& scale)
{
  const std::size_t n = t.dims[slot];
  std::size_t outer = 1, inner = 1;
  for (std::size_t s = 0; s < slot; ++s) outer *= t.dims[s];
  for (std::size_t s = slot + 1; s < t.dims.size(); ++s) inner *= t.dims[s];

  std::vector<Integer> next(outer * m * inner);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t in = 0; in < inner; ++in) {
        const Integer& x = t.data[(o * n + j) * inner + in];
        if (sgn(x) == 0) continue;
        for (std::size_t i = 0; i < m; ++i) {
          const Integer& a = map[i * n + j];
          if (sgn(a) != 0) mpz_addmul(next[(o * m + i) * inner + in].get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
        }
      }
  t.data = std::move(next);
  t.dims[slot] = static_cast<int>(m);
  t.denom *= scale;
}

void apply_to_all_slots(DenseTensor& t, const Matrix& map)
{
  Integer scale = 1;
  for (std::size_t i = 0; i < map.rows(); ++i)
    for (std::size_t j = 0; j < map.cols(); ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), map(i, j).get_den_mpz_t());
  std::vector<Integer> entries(map.rows() * map.cols());
  for (std::size_t i = 0; i < map.rows(); ++i)
    for (std::size_t j = 0; j < map.cols(); ++j) {
      Rational x = map(i, j) * Rational(scale);
      entries[i * map.cols() + j] = x.get_num();
    }
  for (std::size_t s = 0; s < t.dims.size(); ++s) apply_to_slot(t, s, entries, map.rows(), scale);
}

int permutation_sign(const std::vector<int>& seq)
{
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

DenseTensor to_dense(const SkewTensor& t)
{
  DenseTensor d = make_dense(t.n(), t.k());
  d.denom = common_denominator(t.terms());
  for (const auto& [index, c] : t.terms()) {
    Rational scaled = c * Rational(d.denom);
    Integer v = scaled.get_num();
    std::vector<int> perm(index.begin(), index.end());
    do {
      d.data[d.offset(perm)] = permutation_sign(perm) * v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return d;
}

// Symmetric embedding: Phi = sum T[i_1..i_k] x_{i_1}..x_{i_k} over ordered
// index tuples, each ordering of alpha carrying c_alpha / multinomial(alpha).
// Stored over a denominator that includes k!.
DenseTensor to_dense(const SymTensor& t)
{
  DenseTensor d = make_dense(t.n(), t.k());
  const std::int64_t kfact = multinomial(Exponent(t.k(), 1));
  d.denom = common_denominator(t.terms()) * kfact;
  for (const auto& [alpha, c] : t.terms()) {
    Rational scaled = c * Rational(d.denom) / Rational(static_cast<long>(multinomial(alpha)));
    Integer v = scaled.get_num();
    std::vector<int> idx = exponent_to_indices(alpha);
    do {
      d.data[d.offset(idx)] = v;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return d;
}

void check_map(int n, const Matrix& map)
{
  if (static_cast<int>(map.cols()) != n)
    throw std::invalid_argument("linear map has " + std::to_string(map.cols()) + " columns, tensor lives over Q^" +
                                std::to_string(n));
}

} // namespace

SkewTensor apply_linear_map_by_minors(const SkewTensor& t, const Matrix& map)
{
  check_map(t.n(), map);
  const int m = static_cast<int>(map.rows());
  const int k = t.k();
  SkewTensor out(m, k);
  for (const auto& rows : all_subsets(m, k)) {
    Rational acc = 0;
    for (const auto& [cols, c] : t.terms()) {
      Matrix minor(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = map(rows[i], cols[j]);
      acc += determinant(minor) * c;
    }
    out.set(rows, acc);
  }
  return out;
}

SkewTensor apply_linear_map(const SkewTensor& t, const Matrix& map)
{
  check_map(t.n(), map);
  const int m = static_cast<int>(map.rows());
  const int k = t.k();

  // dense route costs ~ k * n^k * m, minors ~ C(m,k) * nnz * k^3
  double dense_cost = k;
  for (int s = 0; s < k; ++s) dense_cost *= t.n();
  dense_cost *= m;
  double minor_cost = static_cast<double>(binomial(m, k)) * static_cast<double>(t.terms().size()) * k * k * k;
  if (minor_cost < dense_cost) return apply_linear_map_by_minors(t, map);

  DenseTensor d = to_dense(t);
  apply_to_all_slots(d, map);
  SkewTensor out(m, k);
  for (const auto& index : all_subsets(m, k))
    if (sgn(d.data[d.offset(index)]) != 0) out.set(index, d.at(index));
  return out;
}

SymTensor apply_linear_map(const SymTensor& t, const Matrix& map)
{
  check_map(t.n(), map);
  const int m = static_cast<int>(map.rows());
  const int k = t.k();
  DenseTensor d = to_dense(t);
  apply_to_all_slots(d, map);
  SymTensor out(m, k);
  for (const auto& alpha : all_exponents(m, k)) {
    std::vector<int> idx = exponent_to_indices(alpha);
    if (sgn(d.data[d.offset(idx)]) != 0) out.set(alpha, d.at(idx) * static_cast<long>(multinomial(alpha)));
  }
  return out;
}

Tensor apply_linear_map(const Tensor& t, const Matrix& map)
{
  return std::visit([&](const auto& x) -> Tensor { return apply_linear_map(x, map); }, t);
}

// ------------------------------------------------------------------ sampling

int Sampler::small_int()
{
  return static_cast<int>(engine_() % 19) - 9;
}

Vector Sampler::vector(int n)
{
  Vector v(n);
  for (auto& x : v) x = small_int();
  return v;
}

Matrix Sampler::matrix(std::size_t rows, std::size_t cols)
{
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_int();
  return m;
}

Matrix Sampler::invertible(std::size_t n)
{
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m = matrix(n, n);
    if (rank(m) == n) return m;
  }
  throw std::runtime_error("failed to sample an invertible matrix");
}

Tensor random_tensor(int n, int k, TensorKind kind, std::uint64_t seed)
{
  Sampler s(seed);
  if (kind == TensorKind::skew) {
    SkewTensor t(n, k);
    for (const auto& index : all_subsets(n, k)) t.set(index, s.small_int());
    return t;
  }
  SymTensor t(n, k);
  for (const auto& alpha : all_exponents(n, k)) t.set(alpha, s.small_int());
  return t;
}

Tensor random_decomposable(int n, int k, TensorKind kind, std::uint64_t seed)
{
  Sampler s(seed);
  if (kind == TensorKind::sym) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Vector v = s.vector(n);
      SymTensor t = sym_power(v, k);
      if (!t.is_zero() || n == 0) return t;
    }
    throw std::runtime_error("failed to sample a nonzero power");
  }
  if (k > n) return SkewTensor(n, k);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vector> vs;
    for (int i = 0; i < k; ++i) vs.push_back(s.vector(n));
    SkewTensor t = wedge(n, vs);
    if (!t.is_zero()) return t;
  }
  throw std::runtime_error("failed to sample independent vectors");
}

} // namespace divatlas
