#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace divatlas {

using Subset = std::vector<int>;    // strictly increasing indices
using Exponent = std::vector<int>;  // exponent vector, entries sum to the degree

/// C(n, k); zero when k < 0, k > n or n < 0. Throws std::overflow_error
/// when the value does not fit in 64 bits.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// k! / prod(alpha_i!) for |alpha| = k.
std::int64_t multinomial(const Exponent& alpha);

/// Lexicographic rank of a strictly increasing k-subset of {0..n-1}.
/// Throws std::out_of_range for an invalid subset.
std::int64_t subset_rank(const Subset& subset, int n);
/// Inverse of subset_rank. Throws std::out_of_range unless 0 <= r < C(n,k).
Subset subset_unrank(std::int64_t r, int k, int n);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> all_subsets(int n, int k);

/// All exponent vectors of length n summing to k, ordered lexicographically
/// by their nondecreasing index sequences (x0^k first, x_{n-1}^k last).
std::vector<Exponent> all_exponents(int n, int k);

/// Nondecreasing index sequence of an exponent vector: (2,0,1) -> {0,0,2}.
std::vector<int> exponent_to_indices(const Exponent& alpha);
Exponent indices_to_exponent(const std::vector<int>& indices, int n);

} // namespace divatlas
