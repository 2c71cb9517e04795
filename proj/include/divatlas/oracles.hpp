#pragma once

// Reference computations that deliberately avoid the production code paths
// they are compared against. Used by the verification suites and the tests.

#include "divatlas/enclosing.hpp"
#include "divatlas/matrix.hpp"
#include "divatlas/tensor.hpp"

#include <cstdint>

namespace divatlas::oracle {

/// Textbook Gaussian elimination over the rationals.
std::size_t naive_rank(const Matrix& m);

/// A seeded random rows x cols matrix of rank at most `max_rank`,
/// built as a product of two random factors.
Matrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t max_rank, Sampler& sampler);

/// A random codimension-one subspace of w (w.dim() >= 1).
SubspaceBasis random_hyperplane(const SubspaceBasis& w, Sampler& sampler);

/// A random subspace of Q^n of dimension m.
SubspaceBasis random_subspace(int n, int m, Sampler& sampler);

/// A tensor over Q^n with enclosing dimension exactly m: a random element of
/// the k-th power of Q^m pushed forward along a random injection Q^m -> Q^n.
/// Requires m to be attainable (e_max(k, m) = m for the kind).
Tensor tensor_with_enc(int n, int k, int m, TensorKind kind, Sampler& sampler);

/// Brute-force deformation test: whether t lies in the k-th power of some
/// dim-`target` subspace, checked with is_in_power_of against subspaces that
/// extend the enclosing space by random vectors and against `trials` random
/// subspaces of that dimension.
bool lies_in_some_power(const Tensor& t, int target, int trials, Sampler& sampler);

/// splitmix64 mix of a base seed and a salt.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

} // namespace divatlas::oracle
