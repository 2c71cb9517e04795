#include "divatlas/enclosing.hpp"
#include "divatlas/oracles.hpp"
#include "divatlas/subspace_geometry.hpp"

#include <gtest/gtest.h>

using namespace divatlas;

constexpr TensorKind skew = TensorKind::skew;
constexpr TensorKind sym = TensorKind::sym;

TEST(EMax, Examples)
{
  EXPECT_EQ(e_max(2, 5), 4);
  EXPECT_EQ(e_max(3, 4), 3);
  EXPECT_EQ(e_max(3, 6), 6);
  EXPECT_EQ(e_max(2, 4), 4);
  EXPECT_EQ(e_max(3, 2), 0);
  EXPECT_EQ(e_max(2, 2), 2);
  EXPECT_EQ(e_max(1, 5), 1);
  EXPECT_EQ(e_max_sym(2, 3), 3);
  EXPECT_EQ(e_max_sym(2, 3, SymMaxMode::paper_compat), 2);
  EXPECT_EQ(e_max_sym(3, 5), 5);
  EXPECT_EQ(e_max_sym(3, 5, SymMaxMode::paper_compat), 5);
  EXPECT_EQ(e_max_sym(1, 4), 1);
}

TEST(EMax, AttainedBySampling)
{
  for (int k = 2; k <= 3; ++k)
    for (int n = 1; n <= 7; ++n) {
      int best = 0, best_sym = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        best = std::max(best, enc(random_tensor(n, k, skew, seed)));
        if (seed < 20) best_sym = std::max(best_sym, enc(random_tensor(n, k, sym, seed)));
      }
      EXPECT_EQ(best, e_max(k, n)) << k << " " << n;
      EXPECT_EQ(best_sym, e_max_sym(k, n)) << k << " " << n;
    }
}

TEST(NormalizeE, Examples)
{
  EXPECT_EQ(normalize_e(5, 2, skew), 4);
  EXPECT_EQ(normalize_e(4, 3, skew), 3);
  EXPECT_EQ(normalize_e(5, 3, skew), 5);
  EXPECT_EQ(normalize_e(3, 2, sym), 3);
  EXPECT_EQ(normalize_e(1, 3, sym), 1);
  EXPECT_THROW(normalize_e(2, 3, skew), std::invalid_argument);
  EXPECT_THROW(normalize_e(0, 2, sym), std::invalid_argument);
}

TEST(SubDim, Examples)
{
  EXPECT_EQ(sub_dim(5, 3, 6, skew), 14);
  EXPECT_EQ(sub_dim(3, 3, 6, skew), 9);
  EXPECT_EQ(sub_dim(6, 3, 6, skew), 19);
  EXPECT_EQ(sub_dim(2, 2, 4, skew), 4);
  EXPECT_EQ(sub_dim(4, 2, 5, skew), 9);
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(sub_dim(1, k, n, sym), n - 1);
  EXPECT_THROW(sub_dim(2, 3, 6, skew), std::invalid_argument);
  EXPECT_THROW(sub_dim(7, 3, 6, skew), std::invalid_argument);
}

TEST(SubDim, FullSpaceAtMaximum)
{
  for (int k = 2; k <= 4; ++k)
    for (int n = k + 1; n <= 8; ++n) {
      EXPECT_EQ(sub_dim(e_max(k, n), k, n, skew), binomial(n, k) - 1) << k << " " << n;
      EXPECT_EQ(sub_dim(n, k, n, sym), binomial(n + k - 1, k) - 1);
    }
}

TEST(SubDim, Monotone)
{
  for (TensorKind kind : {skew, sym})
    for (int k = 2; k <= 4; ++k)
      for (int n = k; n <= 8; ++n) {
        int lo = kind == skew ? k : 1;
        for (int e = lo; e < n; ++e) EXPECT_LE(sub_dim(e, k, n, kind), sub_dim(e + 1, k, n, kind));
      }
}

TEST(SubDim, ProperContainmentsForHigherDegree)
{
  for (int k = 3; k <= 4; ++k)
    for (int n = k; n <= 8; ++n)
      for (int e = k; e <= n; ++e)
        for (int f = e + 1; f <= n; ++f) {
          if (normalize_e(e, k, skew) != e || normalize_e(f, k, skew) != f) continue;
          EXPECT_LT(sub_dim(e, k, n, skew), sub_dim(f, k, n, skew)) << k << " " << n << " " << e << " " << f;
        }
}

TEST(SubDimTangent, Examples)
{
  EXPECT_EQ(sub_dim_tangent(5, 3, 6, skew, 1), 14);
  EXPECT_EQ(sub_dim_tangent(4, 2, 5, skew, 1), 9);
  for (int k = 2; k <= 3; ++k)
    for (int n = k; n <= 6; ++n) EXPECT_EQ(sub_dim_tangent(k, k, n, skew, 3), k * (n - k));
}

TEST(SubDimTangent, AgreesWithClosedForm)
{
  for (TensorKind kind : {skew, sym})
    for (int k = 2; k <= 3; ++k)
      for (int n = k; n <= 7; ++n)
        for (int e = kind == skew ? k : 1; e <= n; ++e)
          for (std::uint64_t seed : {11u, 12u, 13u})
            EXPECT_EQ(sub_dim_tangent(e, k, n, kind, seed), sub_dim(e, k, n, kind))
              << to_string(kind) << " e=" << e << " k=" << k << " n=" << n;
}

TEST(SecDimPrinted, DiffersFromDeterminantal)
{
  EXPECT_EQ(sec_dim_printed(1, 4, skew), sub_dim(2, 2, 4, skew));
  EXPECT_NE(sec_dim_printed(2, 6, skew), sub_dim(4, 2, 6, skew));
  EXPECT_EQ(sec_dim_printed(1, 3, sym), sub_dim(1, 2, 3, sym));
}

TEST(Membership, FlipsAtEnclosingDimension)
{
  for (TensorKind kind : {skew, sym})
    for (int m = 1; m <= 6; ++m) {
      int k = 3;
      if (kind == skew && (m < k || e_max(k, m) != m)) continue;
      Sampler s(m + 17 * (kind == sym));
      Tensor t = oracle::tensor_with_enc(6, k, m, kind, s);
      for (int e = 0; e <= 6; ++e) EXPECT_EQ(in_subspace_variety(t, e), e >= m);
    }
}
