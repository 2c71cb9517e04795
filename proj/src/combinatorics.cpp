#include "divatlas/combinatorics.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace divatlas {

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) is divisible by i at every step
    __int128 next = static_cast<__int128>(out) * (n - k + i) / i;
    if (next > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    out = static_cast<std::int64_t>(next);
  }
  return out;
}

std::int64_t multinomial(const Exponent& alpha)
{
  std::int64_t out = 1;
  std::int64_t running = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    running += a;
    out *= binomial(running, a);
  }
  return out;
}

std::int64_t subset_rank(const Subset& subset, int n)
{
  const int k = static_cast<int>(subset.size());
  std::int64_t r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    int c = subset[i];
    if (c <= prev || c >= n) throw std::out_of_range("subset_rank: not a strictly increasing subset of {0..n-1}");
    for (int j = prev + 1; j < c; ++j) r += binomial(n - 1 - j, k - 1 - i);
    prev = c;
  }
  return r;
}

Subset subset_unrank(std::int64_t r, int k, int n)
{
  if (k < 0 || n < 0 || r < 0 || r >= binomial(n, k))
    throw std::out_of_range("subset_unrank: rank " + std::to_string(r) + " out of range for C(" +
                            std::to_string(n) + ", " + std::to_string(k) + ")");
  Subset out;
  out.reserve(k);
  int c = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      std::int64_t block = binomial(n - 1 - c, k - 1 - i);
      if (r < block) break;
      r -= block;
      ++c;
    }
    out.push_back(c++);
  }
  return out;
}

std::vector<Subset> all_subsets(int n, int k)
{
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::vector<Exponent> all_exponents(int n, int k)
{
  std::vector<Exponent> out;
  if (n <= 0 || k < 0) {
    if (n == 0 && k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> idx(k, 0);
  while (true) {
    out.push_back(indices_to_exponent(idx, n));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[i];
  }
  return out;
}

std::vector<int> exponent_to_indices(const Exponent& alpha)
{
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(alpha.size()); ++i)
    for (int j = 0; j < alpha[i]; ++j) out.push_back(i);
  return out;
}

Exponent indices_to_exponent(const std::vector<int>& indices, int n)
{
  Exponent alpha(n, 0);
  for (int i : indices) {
    if (i < 0 || i >= n) throw std::out_of_range("index outside {0..n-1}");
    ++alpha[i];
  }
  return alpha;
}

} // namespace divatlas
