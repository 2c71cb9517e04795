#include "divatlas/subspace_geometry.hpp"

#include "divatlas/combinatorics.hpp"
#include "divatlas/enclosing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace divatlas {

int e_max(int k, int n)
{
  if (k < 1) throw std::invalid_argument("e_max needs k >= 1");
  if (n < k) return 0;
  if (k == 1) return 1;
  if (k == n - 1 || (k == 2 && n % 2 == 1)) return n - 1;
  return n;
}

int e_max_sym(int k, int n, SymMaxMode mode)
{
  if (k < 1) throw std::invalid_argument("e_max_sym needs k >= 1");
  if (n <= 0) return 0;
  if (k == 1) return 1;
  if (mode == SymMaxMode::paper_compat && k == 2 && n % 2 == 1) return n - 1;
  return n;
}

int e_max(int k, int n, TensorKind kind, SymMaxMode mode)
{
  return kind == TensorKind::skew ? e_max(k, n) : e_max_sym(k, n, mode);
}

int normalize_e(int e, int k, TensorKind kind)
{
  if (k < 1) throw std::invalid_argument("normalize_e needs k >= 1");
  const int lowest = kind == TensorKind::skew ? k : 1;
  if (e < lowest)
    throw std::invalid_argument("enclosing bound e = " + std::to_string(e) + " below " + std::to_string(lowest));
  if (k == 1) return 1;
  if (kind == TensorKind::sym) return e;
  if (k == 2) return 2 * (e / 2);
  if (e == k + 1) return k;
  return e;
}

std::int64_t sub_dim(int e, int k, int n, TensorKind kind)
{
  if (e > n) throw std::invalid_argument("sub_dim: e = " + std::to_string(e) + " exceeds n = " + std::to_string(n));
  const int en = normalize_e(e, k, kind);
  if (k == 1) return n - 1;
  if (k == 2) {
    if (kind == TensorKind::skew) return binomial(n, 2) - binomial(n - en, 2) - 1;
    return binomial(n + 1, 2) - binomial(n - en + 1, 2) - 1;
  }
  if (kind == TensorKind::skew) return static_cast<std::int64_t>(en) * (n - en) + binomial(en, k) - 1;
  return static_cast<std::int64_t>(en) * (n - en) + binomial(en + k - 1, k) - 1;
}

std::int64_t sec_dim_printed(int s, int n, TensorKind kind)
{
  const std::int64_t s64 = s;
  if (kind == TensorKind::skew)
    return std::min<std::int64_t>(binomial(n, 2) - 1, 2 * (n - 2) * s64 + s64 - 1) - 2 * s64 * (s64 - 1);
  return std::min<std::int64_t>(binomial(n + 1, 2) - 1, binomial(s + 1, 2) + s64 * (n - s64) - 1);
}

bool in_subspace_variety(const Tensor& t, int e)
{
  return enc(t) <= e;
}

namespace {

constexpr int kTangentAttempts = 50;

// k-fold array with slot dimensions dims, row-major.
struct Array {
  std::vector<int> dims;
  std::vector<Rational> data;

  std::size_t offset(const std::vector<int>& idx) const
  {
    std::size_t off = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) off = off * dims[s] + idx[s];
    return off;
  }
};

Array embed(const Tensor& t)
{
  const int n = dimension_of(t);
  const int k = degree_of(t);
  Array a;
  a.dims.assign(k, n);
  std::size_t size = 1;
  for (int s = 0; s < k; ++s) size *= n;
  a.data.assign(size, Rational(0));

  if (const auto* skew = std::get_if<SkewTensor>(&t)) {
    for (const auto& [index, c] : skew->terms()) {
      std::vector<int> perm(index.begin(), index.end());
      do {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
          for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
        a.data[a.offset(perm)] = (inv % 2 == 0) ? c : Rational(-c);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  } else {
    for (const auto& [alpha, c] : std::get<SymTensor>(t).terms()) {
      Rational share = c / Rational(static_cast<long>(multinomial(alpha)));
      std::vector<int> idx = exponent_to_indices(alpha);
      do {
        a.data[a.offset(idx)] = share;
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  return a;
}

void map_slot(Array& a, std::size_t slot, const Matrix& m)
{
  const std::size_t from = a.dims[slot];
  const std::size_t to = m.rows();
  std::size_t outer = 1, inner = 1;
  for (std::size_t s = 0; s < slot; ++s) outer *= a.dims[s];
  for (std::size_t s = slot + 1; s < a.dims.size(); ++s) inner *= a.dims[s];
  std::vector<Rational> next(outer * to * inner);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t j = 0; j < from; ++j)
      for (std::size_t in = 0; in < inner; ++in) {
        const Rational& x = a.data[(o * from + j) * inner + in];
        if (sgn(x) == 0) continue;
        for (std::size_t i = 0; i < to; ++i) next[(o * to + i) * inner + in] += m(i, j) * x;
      }
  a.data = std::move(next);
  a.dims[slot] = static_cast<int>(to);
}

// Columns of the Jacobian coming from the linear dependence on w: the images
// of the basis elements of the k-th power of Q^e.
std::vector<Vector> coefficient_columns(const Matrix& a, int k, TensorKind kind)
{
  const int n = static_cast<int>(a.rows());
  const int e = static_cast<int>(a.cols());
  std::vector<Vector> cols;
  if (kind == TensorKind::skew) {
    for (const auto& j : all_subsets(e, k)) {
      std::vector<Vector> vs;
      for (int idx : j) vs.push_back(a.column(idx));
      SkewTensor img = wedge(n, vs);
      Vector col;
      for (const auto& i : all_subsets(n, k)) col.push_back(img.coeff(i));
      cols.push_back(std::move(col));
    }
    return cols;
  }
  std::vector<SymTensor> forms;
  for (int j = 0; j < e; ++j) forms.push_back(linear_form(a.column(j)));
  for (const auto& alpha : all_exponents(e, k)) {
    SymTensor img(n, 0);
    img.set(Exponent(n, 0), 1);
    for (int j = 0; j < e; ++j)
      for (int p = 0; p < alpha[j]; ++p) img = sym_product(img, forms[j]);
    Vector col;
    for (const auto& beta : all_exponents(n, k)) col.push_back(img.coeff(beta));
    cols.push_back(std::move(col));
  }
  return cols;
}

// Columns from the dependence on the entries A_ij (Leibniz rule): with
// partial = (A x ... x A x id) w, the derivative along E_ij at the sorted
// row index I is sum over positions p with I_p = i of
// sign_p * partial[I without p, j], sign_p = (-1)^(k-1-p) for skew tensors
// and 1 for symmetric ones (times the multinomial of the row monomial).
std::vector<Vector> map_columns(const Matrix& a, const Tensor& w, int k, TensorKind kind)
{
  const int n = static_cast<int>(a.rows());
  const int e = static_cast<int>(a.cols());
  Array partial = embed(w);
  for (int s = 0; s + 1 < k; ++s) map_slot(partial, s, a);

  std::vector<std::vector<int>> rows;
  std::vector<long> row_scale;
  if (kind == TensorKind::skew) {
    for (auto& s : all_subsets(n, k)) {
      rows.push_back(s);
      row_scale.push_back(1);
    }
  } else {
    for (const auto& alpha : all_exponents(n, k)) {
      rows.push_back(exponent_to_indices(alpha));
      row_scale.push_back(static_cast<long>(multinomial(alpha)));
    }
  }

  std::vector<Vector> cols;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < e; ++j) {
      Vector col(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& idx = rows[r];
        Rational acc = 0;
        for (int p = 0; p < k; ++p) {
          if (idx[p] != i) continue;
          std::vector<int> rest;
          for (int q = 0; q < k; ++q)
            if (q != p) rest.push_back(idx[q]);
          rest.push_back(j);
          const Rational& x = partial.data[partial.offset(rest)];
          if (kind == TensorKind::skew && (k - 1 - p) % 2 == 1)
            acc -= x;
          else
            acc += x;
        }
        col[r] = acc * row_scale[r];
      }
      cols.push_back(std::move(col));
    }
  return cols;
}

} // namespace

std::int64_t sub_dim_tangent(int e, int k, int n, TensorKind kind, std::uint64_t seed)
{
  if (k < 1) throw std::invalid_argument("sub_dim_tangent needs k >= 1");
  const int lowest = kind == TensorKind::skew ? k : 1;
  if (e < lowest || e > n)
    throw std::invalid_argument("sub_dim_tangent: e = " + std::to_string(e) + " outside [" + std::to_string(lowest) +
                                ", " + std::to_string(n) + "]");

  Sampler sampler(seed);
  const int target_enc = e_max(k, e, kind);
  for (int attempt = 0; attempt < kTangentAttempts; ++attempt) {
    Matrix a = sampler.matrix(n, e);
    if (rank(a) != static_cast<std::size_t>(e)) continue;
    Tensor w = random_tensor(e, k, kind, sampler.raw());
    if (enc(w) != target_enc) continue;

    std::vector<Vector> cols = coefficient_columns(a, k, kind);
    for (auto& c : map_columns(a, w, k, kind)) cols.push_back(std::move(c));
    const std::size_t rows = cols.front().size();
    return static_cast<std::int64_t>(rank(Matrix::from_columns(rows, cols))) - 1;
  }
  throw std::runtime_error("sub_dim_tangent: no nondegenerate sample after " + std::to_string(kTangentAttempts) +
                           " attempts");
}

} // namespace divatlas
