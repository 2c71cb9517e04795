#pragma once

#include "divatlas/tensor.hpp"

#include <cstdint>

namespace divatlas {

/// How the maximum enclosing dimension of symmetric tensors is evaluated.
///  faithful      n for every n >= 1 (a generic form has a full-rank catalecticant)
///  paper_compat  n - 1 for k = 2 and n odd, n otherwise
enum class SymMaxMode { faithful, paper_compat };

/// Maximum enclosing dimension over the k-th exterior power of Q^n:
/// 0 when n < k, n - 1 when k = n - 1 or (k = 2 and n odd), 1 when k = 1,
/// n otherwise.
int e_max(int k, int n);

/// Maximum enclosing dimension over the k-th symmetric power of Q^n.
int e_max_sym(int k, int n, SymMaxMode mode = SymMaxMode::faithful);

int e_max(int k, int n, TensorKind kind, SymMaxMode mode = SymMaxMode::faithful);

/// Smallest e' with Sub_{e'} = Sub_e. Skew: 2*floor(e/2) for k = 2, k for
/// k >= 3 and e = k + 1, e otherwise. Symmetric: e (1 for k = 1 in both kinds).
/// Throws std::invalid_argument for e < k (skew) or e < 1 (symmetric).
int normalize_e(int e, int k, TensorKind kind);

/// Projective dimension of Sub_e over the k-th power of Q^n.
///  k >= 3, skew  e'(n-e') + C(e',k) - 1 with e' = normalize_e(e)
///  k >= 3, sym   e(n-e) + C(e+k-1,k) - 1
///  k = 2,  skew  C(n,2) - C(n-e',2) - 1   (skew matrices of rank <= e')
///  k = 2,  sym   C(n+1,2) - C(n-e+1,2) - 1 (symmetric matrices of rank <= e)
///  k = 1          n - 1
/// Throws std::invalid_argument outside k <= e <= n (1 <= e <= n for sym).
std::int64_t sub_dim(int e, int k, int n, TensorKind kind);

/// The secant-variety dimension expressions as printed for Sec_s of the
/// Grassmannian of 2-planes and of the quadratic Veronese, kept for side-by-side
/// reporting; they are not used for any computed dimension.
///  skew  min{C(n,2) - 1, 2(n-2)s + s - 1} - 2s(s-1)
///  sym   min{C(n+1,2) - 1, C(s+1,2) + s(n-s) - 1}
std::int64_t sec_dim_printed(int s, int n, TensorKind kind);

/// Independent dimension oracle: rank of the Jacobian of
/// (A, w) -> (wedge^k A)(w)  (resp. S^k A), A : Q^e -> Q^n, at a seeded random
/// point with A of full rank and w of maximal enclosing dimension, minus one.
/// Redraws degenerate samples a bounded number of times, then throws
/// std::runtime_error.
std::int64_t sub_dim_tangent(int e, int k, int n, TensorKind kind, std::uint64_t seed);

/// Membership in Sub_e: enc(t) <= e.
bool in_subspace_variety(const Tensor& t, int e);

} // namespace divatlas
