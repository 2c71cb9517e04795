#include "divatlas/verify.hpp"

#include "divatlas/atlas.hpp"
#include "divatlas/brill_noether.hpp"
#include "divatlas/combinatorics.hpp"
#include "divatlas/enclosing.hpp"
#include "divatlas/oracles.hpp"
#include "divatlas/subspace_geometry.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace divatlas {

namespace {

class Checker {
public:
  void check(bool ok, const std::string& what)
  {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }

  SuiteResult result(const std::string& name) const
  {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed; first: " << first_failure_;
    return {name, failures_ == 0, out.str()};
  }

private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

SuiteResult rank_oracle(std::uint64_t seed)
{
  Checker c;
  Sampler s(oracle::derive_seed(seed, 1));
  for (int i = 0; i < 100; ++i) {
    std::size_t rows = 1 + s.raw() % 12;
    std::size_t cols = 1 + s.raw() % 12;
    Matrix m = (i % 2 == 0) ? s.matrix(rows, cols) : oracle::low_rank_matrix(rows, cols, 1 + s.raw() % 6, s);
    std::size_t r = rank(m);
    std::ostringstream what;
    what << rows << "x" << cols << " sample " << i;
    c.check(r == oracle::naive_rank(m), "Bareiss vs naive rank, " + what.str());
    c.check(r == rank(m.transpose()), "rank vs transpose rank, " + what.str());
  }
  return c.result("rank-oracle");
}

SuiteResult enc_oracle(std::uint64_t seed)
{
  Checker c;
  const std::vector<std::pair<int, int>> grid = {{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}};
  for (const auto& [k, n] : grid) {
    int best = 0;
    for (int i = 0; i < 100; ++i) {
      std::uint64_t sample_seed = oracle::derive_seed(seed, 1000 * k + 100 * n + i);
      std::ostringstream where;
      where << "(k,n)=(" << k << "," << n << ") sample " << i;

      Tensor dec = random_decomposable(n, k, TensorKind::skew, sample_seed);
      c.check(enc(dec) == k, "decomposable enc, " + where.str());

      Tensor t = random_tensor(n, k, TensorKind::skew, sample_seed);
      SubspaceBasis space = enclosing_space(t);
      best = std::max(best, space.dim());
      c.check(space.dim() <= e_max(k, n), "enc bounded by e_max, " + where.str());
      c.check(is_in_power_of(t, space), "self-enclosure, " + where.str());
      Sampler s(sample_seed ^ 0x5bd1e995);
      if (space.dim() > 0) c.check(!is_in_power_of(t, oracle::random_hyperplane(space, s)), "minimality, " + where.str());
    }
    c.check(best == e_max(k, n), "max observed enc equals e_max at (k,n)=(" + std::to_string(k) + "," +
                                     std::to_string(n) + ")");
  }
  return c.result("enc-oracle");
}

SuiteResult subdim_oracle(std::uint64_t seed)
{
  Checker c;
  for (TensorKind kind : {TensorKind::skew, TensorKind::sym})
    for (int k = 2; k <= 3; ++k)
      for (int n = k; n <= 7; ++n)
        for (int e = (kind == TensorKind::skew ? k : 1); e <= n; ++e)
          for (int rep = 0; rep < 3; ++rep) {
            std::uint64_t s = oracle::derive_seed(seed, 7919 * rep + 101 * e + 11 * n + k + (kind == TensorKind::sym));
            std::ostringstream where;
            where << to_string(kind) << " (e,k,n)=(" << e << "," << k << "," << n << ") rep " << rep;
            c.check(sub_dim_tangent(e, k, n, kind, s) == sub_dim(e, k, n, kind), "tangent vs closed form, " + where.str());
          }
  return c.result("subdim-oracle");
}

SuiteResult deformability(std::uint64_t seed)
{
  Checker c;
  for (TensorKind kind : {TensorKind::skew, TensorKind::sym})
    for (int k = 2; k <= 4; ++k)
      for (int n = k; n <= 6; ++n)
        for (int m = (kind == TensorKind::skew ? k : 1); m <= n; ++m) {
          if (e_max(k, m, kind) != m) continue;
          for (int rep = 0; rep < 20; ++rep) {
            Sampler s(oracle::derive_seed(seed, 100000 * (kind == TensorKind::sym) + 1000 * rep + 49 * k + 7 * n + m));
            Tensor t = oracle::tensor_with_enc(n, k, m, kind, s);
            std::ostringstream where;
            where << to_string(kind) << " k=" << k << " n=" << n << " enc=" << m << " rep " << rep;
            c.check(enc(t) == m, "sampled enclosing dimension, " + where.str());
            for (int r = (kind == TensorKind::skew ? k - 1 : 0); r < n; ++r) {
              bool predicted = deformable(m, k, r, kind);
              bool brute = oracle::lies_in_some_power(t, r + 1, 1, s);
              c.check(predicted == brute, "deformability predicate vs brute force, " + where.str() + " r=" + std::to_string(r));
            }
          }
        }
  return c.result("deformability");
}

SuiteResult worked_examples(std::uint64_t)
{
  Checker c;
  const std::vector<int> strata = {36, 33, 28, 21, 12, 1};
  for (int r = 0; r <= 5; ++r) c.check(w_dim(37, r, 36) == strata[r], "w_dim(37, r, 36)");
  c.check(!w_dim(37, 6, 36).has_value(), "W^6_36 empty");

  auto totals = [](int g, int d, int k) {
    std::vector<std::int64_t> out;
    for (const auto& comp : components(g, d, k, TensorKind::skew)) out.push_back(comp.total_dim);
    return out;
  };
  c.check(jump_strata(37, 36, 2, TensorKind::skew) == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 6}},
          "g=37 k=2 strata");
  c.check(totals(37, 36, 2) == std::vector<std::int64_t>{33, 26, 15}, "g=37 k=2 dimensions");
  c.check(jump_strata(37, 36, 3, TensorKind::skew) == std::vector<std::pair<int, int>>{{2, 3}, {4, 5}, {5, 6}},
          "g=37 k=3 strata");
  c.check(totals(37, 36, 3) == std::vector<std::int64_t>{28, 21, 20}, "g=37 k=3 dimensions");

  c.check(sub_dim(5, 3, 6, TensorKind::skew) == 14, "Sub_5 in wedge^3 Q^6");
  c.check(sub_dim(3, 3, 6, TensorKind::skew) == 9, "Grassmannian G(3,6)");
  c.check(sub_dim(6, 3, 6, TensorKind::skew) == 19, "Sub_6 in wedge^3 Q^6");
  c.check(sub_dim(2, 2, 4, TensorKind::skew) == 4, "G(1,3)");

  for (int g = 3; g <= 12; ++g) {
    auto comps = components(g, 2 * g - 2, 2, TensorKind::skew);
    std::size_t expected = g % 2 == 0 ? 2 : 1;
    c.check(comps.size() == expected, "canonical parity component count, g=" + std::to_string(g));
    if (g % 2 == 0) {
      auto inter = intersections(g, 2 * g - 2, 2, TensorKind::skew);
      c.check(inter.size() == 1 && inter[0].image_r == g - 1 && inter[0].fiber.e == g - 2 &&
                inter[0].fiber.ambient == g && inter[0].total_dim == binomial(g, 2) - 2,
              "canonical intersection, g=" + std::to_string(g));
    }
  }

  for (int g = 2; g <= 10; ++g)
    c.check(Rational(factorial(g)) * lambda_grd(g, g - 1, 2 * g - 2) == 1, "g! lambda(g, g-1, 2g-2) = 1");
  c.check(w_top_points(4, 3) == 2, "two g^1_3 on a genus-4 curve");
  return c.result("worked-examples");
}

SuiteResult exorbitance_gap(std::uint64_t)
{
  Checker c;
  for (int g = 3; g <= 30; ++g) {
    c.check(canonical_analysis(g, 2).gap < 0, "gap negative for k=2, g=" + std::to_string(g));
    if (g < 6) continue;
    for (int k = 3; k <= g - 2; ++k) {
      CanonicalReport rep = canonical_analysis(g, k);
      std::string where = "g=" + std::to_string(g) + " k=" + std::to_string(k);
      c.check(rep.gap > 0, "gap positive, " + where);
      c.check(rep.locus_codim == binomial(g - 1, k - 1) - (g - 1) && rep.locus_codim != 0, "locus codim, " + where);
      c.check(rep.exorbitant, "exorbitant, " + where);
    }
  }
  return c.result("exorbitance-gap");
}

SuiteResult count_reconciliation(std::uint64_t)
{
  Checker c;
  int agreeing = 0, disagreeing = 0;
  for (int g = 2; g <= 20; ++g)
    for (int d = 1; d <= 2 * g; ++d)
      for (int k = 2; k <= 3; ++k)
        for (TensorKind kind : {TensorKind::skew, TensorKind::sym}) {
          ComponentCount cnt = component_count(g, d, k, kind);
          std::int64_t sum = 0;
          for (const auto& comp : components(g, d, k, kind)) sum += comp.multiplicity;
          c.check(cnt.enumerated == sum && cnt.agrees == (cnt.enumerated == cnt.paper_formula), "count bookkeeping");
          (cnt.agrees ? agreeing : disagreeing)++;
        }
  ComponentCount full = component_count(37, 36, 2, TensorKind::skew);
  c.check(full.enumerated == 3, "g=37 k=2 enumerated count");
  SuiteResult r = c.result("count-reconciliation");
  r.detail += "; closed form agrees on " + std::to_string(agreeing) + ", differs on " + std::to_string(disagreeing);
  return r;
}

using SuiteFn = std::function<SuiteResult(std::uint64_t)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
    {"rank-oracle", rank_oracle},
    {"enc-oracle", enc_oracle},
    {"subdim-oracle", subdim_oracle},
    {"deformability", deformability},
    {"worked-examples", worked_examples},
    {"exorbitance-gap", exorbitance_gap},
    {"count-reconciliation", count_reconciliation},
  };
  return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed)
{
  for (const auto& [n, fn] : registry())
    if (n == name) {
      try {
        return fn(seed);
      } catch (const std::exception& ex) {
        return {name, false, std::string("exception: ") + ex.what()};
      }
    }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(std::uint64_t seed, const std::optional<std::string>& only)
{
  std::vector<SuiteResult> out;
  if (only) {
    out.push_back(run_suite(*only, seed));
    return out;
  }
  for (const auto& name : suite_names()) out.push_back(run_suite(name, seed));
  return out;
}

} // namespace divatlas
