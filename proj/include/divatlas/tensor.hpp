#pragma once

#include "divatlas/combinatorics.hpp"
#include "divatlas/matrix.hpp"
#include "divatlas/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string_view>
#include <variant>

namespace divatlas {

enum class TensorKind { skew, sym };

std::string_view to_string(TensorKind kind);
/// Accepts "skew" and "sym". Throws std::invalid_argument otherwise.
TensorKind parse_tensor_kind(std::string_view text);

/// An element of the k-th exterior power of Q^n, stored sparsely on the
/// basis e_I = e_{i_1} ^ ... ^ e_{i_k} with i_1 < ... < i_k. Zero
/// coefficients are never stored.
class SkewTensor {
public:
  SkewTensor(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::map<Subset, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Throws std::invalid_argument unless `index` is a strictly increasing
  /// k-subset of {0..n-1}.
  void set(const Subset& index, const Rational& value);
  void add(const Subset& index, const Rational& value);
  Rational coeff(const Subset& index) const;

  SkewTensor& operator+=(const SkewTensor& other);
  SkewTensor& operator*=(const Rational& c);
  friend SkewTensor operator+(SkewTensor a, const SkewTensor& b) { return a += b; }
  friend SkewTensor operator*(const Rational& c, SkewTensor t) { return t *= c; }
  friend bool operator==(const SkewTensor&, const SkewTensor&) = default;

private:
  void check_index(const Subset& index) const;

  int n_;
  int k_;
  std::map<Subset, Rational> terms_;
};

/// An element of the k-th symmetric power of Q^n, i.e. a degree-k form.
/// Coefficients are those of the monomials x^alpha (not divided-power
/// coefficients), so x*y has coefficient 1 on alpha = (1,1).
class SymTensor {
public:
  SymTensor(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Throws std::invalid_argument unless `alpha` has length n, nonnegative
  /// entries and total degree k.
  void set(const Exponent& alpha, const Rational& value);
  void add(const Exponent& alpha, const Rational& value);
  Rational coeff(const Exponent& alpha) const;

  SymTensor& operator+=(const SymTensor& other);
  SymTensor& operator*=(const Rational& c);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator*(const Rational& c, SymTensor t) { return t *= c; }
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

private:
  void check_index(const Exponent& alpha) const;

  int n_;
  int k_;
  std::map<Exponent, Rational> terms_;
};

using Tensor = std::variant<SkewTensor, SymTensor>;

inline TensorKind kind_of(const Tensor& t) { return std::holds_alternative<SkewTensor>(t) ? TensorKind::skew : TensorKind::sym; }
int dimension_of(const Tensor& t);
int degree_of(const Tensor& t);

/// u_1 ^ ... ^ u_k. The coefficient on e_I is the determinant of the k x k
/// minor of [u_1 .. u_k] on rows I. Every vector must have length n.
SkewTensor wedge(int n, std::span<const Vector> vectors);

/// The linear form sum v_i x_i as a degree-1 SymTensor.
SymTensor linear_form(std::span<const Rational> v);
SymTensor sym_product(const SymTensor& a, const SymTensor& b);
/// (sum v_i x_i)^k, expanded in monomials.
SymTensor sym_power(std::span<const Rational> v, int k);

/// The induced action of a linear map Q^n -> Q^m (an m x n matrix) on the
/// k-th exterior or symmetric power.
SkewTensor apply_linear_map(const SkewTensor& t, const Matrix& map);
SymTensor apply_linear_map(const SymTensor& t, const Matrix& map);
Tensor apply_linear_map(const Tensor& t, const Matrix& map);

/// Reference route for the skew action: coefficient on e_I is
/// sum_J det(map[I, J]) t_J. Kept separate so the two routes can be compared.
SkewTensor apply_linear_map_by_minors(const SkewTensor& t, const Matrix& map);

/// Deterministic sampler of small integers in {-9..9}. Draws are taken
/// directly from the 64-bit Mersenne twister stream, so the sequence for a
/// given seed is identical across standard library implementations.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  int small_int();
  Vector vector(int n);
  Matrix matrix(std::size_t rows, std::size_t cols);
  /// A random square matrix, redrawn until it is invertible.
  Matrix invertible(std::size_t n);
  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

/// Every basis coefficient drawn from {-9..9}.
Tensor random_tensor(int n, int k, TensorKind kind, std::uint64_t seed);
/// wedge (resp. k-th power) of random vectors. Skew samples redraw the
/// vectors until they are independent, so enc is exactly k when k <= n.
Tensor random_decomposable(int n, int k, TensorKind kind, std::uint64_t seed);

} // namespace divatlas
