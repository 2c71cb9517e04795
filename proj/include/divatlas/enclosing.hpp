#pragma once

#include "divatlas/matrix.hpp"
#include "divatlas/tensor.hpp"

#include <cstddef>
#include <vector>

namespace divatlas {

/// A linearly independent list of vectors in Q^ambient_dim.
class SubspaceBasis {
public:
  /// Throws std::invalid_argument if a vector has the wrong length or the
  /// vectors are linearly dependent.
  SubspaceBasis(int ambient_dim, std::vector<Vector> vectors);

  int ambient_dim() const noexcept { return ambient_dim_; }
  int dim() const noexcept { return static_cast<int>(vectors_.size()); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }

  bool contains(const Vector& v) const { return in_span(v, vectors_); }

private:
  int ambient_dim_;
  std::vector<Vector> vectors_;
};

/// The contraction from the (k-1)-th exterior power of the dual into V,
/// as an n x C(n, k-1) matrix. Column J (lexicographic rank of the
/// (k-1)-subset J) holds, in row i not in J, (-1)^p * t_{J+i} where p is
/// the 0-based position of i inside the sorted set J+i; rows i in J are 0.
Matrix contraction_matrix(const SkewTensor& t);

/// First catalecticant, n x C(n+k-2, k-1). Column alpha' (|alpha'| = k-1,
/// ordered as all_exponents) has row-i entry (alpha'_i + 1) * c_{alpha' + e_i},
/// i.e. the coefficient of x_i in the derivative d^{alpha'} Phi up to the
/// positive column factor alpha'!.
Matrix contraction_matrix(const SymTensor& t);
Matrix contraction_matrix(const Tensor& t);

/// Smallest subspace U with t in the k-th power of U: the column space of
/// the contraction matrix. Degree-0 tensors yield the zero subspace.
SubspaceBasis enclosing_space(const Tensor& t);

/// dim enclosing_space(t).
int enc(const Tensor& t);

/// Whether t lies in the k-th exterior (symmetric) power of W. W is first
/// completed to a basis of V by standard vectors, t is rewritten in that
/// basis, and every coefficient touching a complement vector must vanish.
/// Throws std::invalid_argument when W lives in a different ambient space.
bool is_in_power_of(const Tensor& t, const SubspaceBasis& w);

} // namespace divatlas
