#include "divatlas/combinatorics.hpp"
#include "divatlas/enclosing.hpp"
#include "divatlas/oracles.hpp"
#include "divatlas/subspace_geometry.hpp"
#include "divatlas/tensor.hpp"

#include <gtest/gtest.h>

using namespace divatlas;

namespace {

Vector unit(int n, int i)
{
  Vector v(n);
  v[i] = 1;
  return v;
}

SkewTensor symplectic(int n)
{
  SkewTensor t(n, 2);
  t.set({0, 1}, 1);
  t.set({2, 3}, 1);
  return t;
}

} // namespace

TEST(Combinatorics, SubsetRanking)
{
  EXPECT_EQ(subset_rank({0, 1}, 4), 0);
  EXPECT_EQ(subset_rank({0, 2}, 4), 1);
  EXPECT_EQ(subset_unrank(binomial(7, 3) - 1, 3, 7), (Subset{4, 5, 6}));
  auto all = all_subsets(6, 3);
  ASSERT_EQ(all.size(), 20u);
  for (std::size_t r = 0; r < all.size(); ++r) {
    EXPECT_EQ(subset_rank(all[r], 6), static_cast<std::int64_t>(r));
    EXPECT_EQ(subset_unrank(r, 3, 6), all[r]);
  }
  EXPECT_THROW(subset_rank({1, 1}, 4), std::out_of_range);
  EXPECT_THROW(subset_rank({0, 4}, 4), std::out_of_range);
  EXPECT_THROW(subset_unrank(6, 2, 4), std::out_of_range);
}

TEST(Combinatorics, BinomialAndExponents)
{
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(60, 30), 118264581564861424LL);
  EXPECT_THROW(binomial(200, 100), std::overflow_error);
  EXPECT_EQ(multinomial({2, 1, 1}), 12);
  auto ex = all_exponents(3, 2);
  ASSERT_EQ(ex.size(), 6u);
  EXPECT_EQ(ex.front(), (Exponent{2, 0, 0}));
  EXPECT_EQ(ex.back(), (Exponent{0, 0, 2}));
  EXPECT_EQ(exponent_to_indices({2, 0, 1}), (std::vector<int>{0, 0, 2}));
  EXPECT_EQ(indices_to_exponent({0, 0, 2}, 3), (Exponent{2, 0, 1}));
}

TEST(Tensor, IndexValidation)
{
  SkewTensor t(4, 2);
  EXPECT_THROW(t.set({1, 0}, 1), std::invalid_argument);
  EXPECT_THROW(t.set({0, 4}, 1), std::invalid_argument);
  EXPECT_THROW(t.set({0}, 1), std::invalid_argument);
  t.set({0, 1}, 0);
  EXPECT_TRUE(t.is_zero());
  SymTensor f(2, 3);
  EXPECT_THROW(f.set({1, 1}, 1), std::invalid_argument);
  EXPECT_THROW(f.set({4, -1}, 1), std::invalid_argument);
  EXPECT_TRUE(SkewTensor(3, 4).is_zero());
}

TEST(Wedge, Examples)
{
  std::vector<Vector> e12 = {unit(4, 0), unit(4, 1)};
  SkewTensor w = wedge(4, e12);
  ASSERT_EQ(w.terms().size(), 1u);
  EXPECT_EQ(w.coeff({0, 1}), 1);

  Vector v{1, 2, 3};
  std::vector<Vector> vv = {v, v};
  EXPECT_TRUE(wedge(3, vv).is_zero());

  std::vector<Vector> sum = {Vector{1, 1, 0}, unit(3, 1)};
  SkewTensor ws = wedge(3, sum);
  ASSERT_EQ(ws.terms().size(), 1u);
  EXPECT_EQ(ws.coeff({0, 1}), 1);
}

TEST(Wedge, Multilinearity)
{
  Sampler s(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> us;
    for (int i = 0; i < 3; ++i) us.push_back(s.vector(5));
    SkewTensor base = wedge(5, us);
    std::vector<Vector> shifted = us;
    Rational c = s.small_int();
    for (int x = 0; x < 5; ++x) shifted[1][x] += c * us[2][x];
    EXPECT_EQ(wedge(5, shifted), base);
    std::swap(shifted[0], shifted[2]);
    EXPECT_EQ(wedge(5, shifted), Rational(-1) * base);
  }
}

TEST(SymPower, Examples)
{
  SymTensor cube = sym_power(unit(2, 0), 3);
  ASSERT_EQ(cube.terms().size(), 1u);
  EXPECT_EQ(cube.coeff({3, 0}), 1);

  SymTensor xy = sym_product(linear_form(unit(2, 0)), linear_form(unit(2, 1)));
  ASSERT_EQ(xy.terms().size(), 1u);
  EXPECT_EQ(xy.coeff({1, 1}), 1);

  SymTensor sq = sym_power(Vector{1, 1}, 2);
  EXPECT_EQ(sq.coeff({2, 0}), 1);
  EXPECT_EQ(sq.coeff({1, 1}), 2);
  EXPECT_EQ(sq.coeff({0, 2}), 1);
}

TEST(Contraction, SkewExamples)
{
  std::vector<Vector> e12 = {unit(2, 0), unit(2, 1)};
  Matrix m = contraction_matrix(wedge(2, e12));
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(rank(m), 2u);

  EXPECT_EQ(contraction_matrix(SkewTensor(4, 2)), Matrix(4, 4));

  Matrix expected{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  EXPECT_EQ(contraction_matrix(symplectic(4)), expected);
  EXPECT_EQ(rank(expected), 4u);
}

TEST(Contraction, SymExamples)
{
  SymTensor q(3, 2);
  q.set({2, 0, 0}, 1);
  q.set({0, 2, 0}, 1);
  q.set({0, 0, 2}, 1);
  Matrix c = contraction_matrix(q);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c(i, j), i == j ? 2 : 0);

  for (int k = 1; k <= 4; ++k) EXPECT_EQ(rank(contraction_matrix(sym_power(unit(3, 0), k))), 1u);

  SymTensor f(2, 3);
  f.set({3, 0}, 1);
  f.set({0, 3}, 1);
  Matrix cf = contraction_matrix(f);
  EXPECT_EQ(cf, (Matrix{{3, 0, 0}, {0, 0, 3}}));
  EXPECT_EQ(rank(cf), 2u);
}

TEST(Enclosing, Examples)
{
  std::vector<Vector> e12 = {unit(4, 0), unit(4, 1)};
  SubspaceBasis w = enclosing_space(wedge(4, e12));
  EXPECT_EQ(w.dim(), 2);
  EXPECT_TRUE(w.contains(unit(4, 0)));
  EXPECT_TRUE(w.contains(unit(4, 1)));

  EXPECT_EQ(enclosing_space(SkewTensor(4, 2)).dim(), 0);

  SubspaceBasis s = enclosing_space(symplectic(5));
  EXPECT_EQ(s.dim(), 4);
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(s.contains(unit(5, i)));
  EXPECT_FALSE(s.contains(unit(5, 4)));
  EXPECT_EQ(enc(symplectic(4)), 4);
}

TEST(Enclosing, DegenerateDegrees)
{
  SkewTensor scalar(3, 0);
  scalar.set({}, 5);
  EXPECT_EQ(enc(scalar), 0);
  EXPECT_EQ(enc(SkewTensor(3, 0)), 0);
  EXPECT_EQ(enc(SymTensor(3, 0)), 0);
  EXPECT_EQ(enc(SkewTensor(2, 3)), 0);
}

TEST(Enclosing, RandomTwoFormsInFiveDimensions)
{
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_EQ(enc(random_tensor(5, 2, TensorKind::skew, seed)), 4);
}

TEST(Enclosing, SamplerRates)
{
  int full36 = 0, full_quadric = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_LE(enc(random_decomposable(5, 2, TensorKind::skew, seed)), 2);
    if (enc(random_tensor(6, 3, TensorKind::skew, seed)) == 6) ++full36;
    if (enc(random_tensor(3, 2, TensorKind::sym, seed)) == 3) ++full_quadric;
  }
  EXPECT_GE(full36, 90);
  EXPECT_GE(full_quadric, 90);
}

TEST(Enclosing, DeterministicSampling)
{
  EXPECT_EQ(random_tensor(5, 3, TensorKind::skew, 42), random_tensor(5, 3, TensorKind::skew, 42));
  EXPECT_NE(random_tensor(5, 3, TensorKind::skew, 42), random_tensor(5, 3, TensorKind::skew, 43));
  Sampler s(0);
  for (int i = 0; i < 1000; ++i) {
    int x = s.small_int();
    EXPECT_GE(x, -9);
    EXPECT_LE(x, 9);
  }
}

TEST(IsInPowerOf, Examples)
{
  std::vector<Vector> e12 = {unit(4, 0), unit(4, 1)};
  Tensor t = wedge(4, e12);
  EXPECT_TRUE(is_in_power_of(t, SubspaceBasis(4, {unit(4, 0), unit(4, 1), unit(4, 2)})));
  EXPECT_FALSE(is_in_power_of(t, SubspaceBasis(4, {unit(4, 1), unit(4, 2)})));
  EXPECT_THROW(is_in_power_of(t, SubspaceBasis(3, {unit(3, 0)})), std::invalid_argument);

  Tensor omega = symplectic(4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Sampler s(seed);
    EXPECT_FALSE(is_in_power_of(omega, oracle::random_subspace(4, 3, s)));
  }
}

TEST(IsInPowerOf, SelfEnclosureAndMinimality)
{
  for (TensorKind kind : {TensorKind::skew, TensorKind::sym})
    for (int k = 2; k <= 3; ++k)
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Sampler s(seed + 100 * k);
        int m = kind == TensorKind::skew ? (k == 2 ? 4 : 3 + seed % 3) : 1 + seed % 5;
        if (kind == TensorKind::skew && e_max(k, m) != m) m = k;
        Tensor t = oracle::tensor_with_enc(6, k, m, kind, s);
        SubspaceBasis w = enclosing_space(t);
        ASSERT_EQ(w.dim(), m);
        EXPECT_TRUE(is_in_power_of(t, w));
        for (int h = 0; h < 20; ++h) EXPECT_FALSE(is_in_power_of(t, oracle::random_hyperplane(w, s)));
      }
}

TEST(Enclosing, ScalingAndBasisInvariance)
{
  for (TensorKind kind : {TensorKind::skew, TensorKind::sym})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Sampler s(seed);
      Tensor t = oracle::tensor_with_enc(5, 3, kind == TensorKind::skew ? 3 + (seed % 2) * 2 : 1 + seed % 5, kind, s);
      int base = enc(t);
      Rational c(s.small_int() == 0 ? 3 : -7, 2);
      Tensor scaled = std::visit([&](auto x) -> Tensor { return c * x; }, t);
      EXPECT_EQ(enc(scaled), base);
      EXPECT_EQ(enc(apply_linear_map(t, s.invertible(5))), base);
      EXPECT_LE(base, e_max(3, 5, kind));
    }
}

TEST(LinearMap, MinorRouteAgreesWithDenseRoute)
{
  Sampler s(31);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + trial % 4, k = 1 + trial % 3, m = 2 + trial % 5;
    SkewTensor t = std::get<SkewTensor>(random_tensor(n, k, TensorKind::skew, s.raw()));
    Matrix a = s.matrix(m, n);
    EXPECT_EQ(apply_linear_map(t, a), apply_linear_map_by_minors(t, a));
  }
}

TEST(LinearMap, SymmetricActionIsSubstitution)
{
  Sampler s(8);
  for (int trial = 0; trial < 10; ++trial) {
    Vector v = s.vector(3);
    Matrix a = s.matrix(4, 3);
    SymTensor pushed = apply_linear_map(sym_power(v, 3), a);
    EXPECT_EQ(pushed, sym_power(a.apply(v), 3));
    SymTensor prod = sym_product(linear_form(v), sym_power(s.vector(3), 2));
    EXPECT_EQ(apply_linear_map(prod, Matrix::identity(3)), prod);
  }
}

TEST(LinearMap, RejectsShapeMismatch)
{
  EXPECT_THROW(apply_linear_map(symplectic(4), Matrix(4, 3)), std::invalid_argument);
}
