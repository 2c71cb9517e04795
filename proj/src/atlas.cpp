#include "divatlas/atlas.hpp"

#include "divatlas/brill_noether.hpp"
#include "divatlas/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace divatlas {

namespace {

void check_atlas_params(int g, int d, int k)
{
  CurveParams params(g, d);
  if (k < 2) throw std::invalid_argument("symmetric product degree k must be at least 2, got " + std::to_string(k));
}

} // namespace

std::int64_t fiber_dim(int r, int k, TensorKind kind)
{
  if (r < 0) throw std::invalid_argument("fiber_dim needs r >= 0");
  if (kind == TensorKind::skew) return binomial(r + 1, k) - 1;
  return binomial(r + k, k) - 1;
}

bool deformable(int enc_value, int k, int r_target, TensorKind kind, SymMaxMode mode)
{
  return enc_value <= e_max(k, r_target + 1, kind, mode);
}

std::vector<std::pair<int, int>> jump_strata(int g, int d, int k, TensorKind kind, SymMaxMode mode)
{
  check_atlas_params(g, d, k);
  std::vector<std::pair<int, int>> out;
  int best = 0;
  for (int r : achieved_r(g, d)) {
    if (fiber_dim(r, k, kind) < 0) continue;
    int e = e_max(k, r + 1, kind, mode);
    if (e > best) {
      out.emplace_back(r, e);
      best = e;
    }
  }
  return out;
}

std::vector<ComponentRecord> components(int g, int d, int k, TensorKind kind, const AtlasOptions& options)
{
  const auto strata = jump_strata(g, d, k, kind, options.sym_mode);
  const int top = big_R(g, d);
  const auto top_points = w_top_points(g, d);

  std::vector<ComponentRecord> out;
  for (const auto& [r, e] : strata) {
    ComponentRecord c;
    c.r = r;
    c.e = e;
    c.support_dim = *w_dim(g, r, d);
    c.fiber_dim = fiber_dim(r, k, kind);
    c.total_dim = c.support_dim + c.fiber_dim;
    if (r == top && top_points) c.multiplicity = *top_points;
    c.is_resolution = kind == TensorKind::skew && d == g - 1 && e == r + 1 && e == k;
    out.push_back(c);
  }
  return out;
}

std::vector<IntersectionRecord> intersections(int g, int d, int k, TensorKind kind, const AtlasOptions& options)
{
  const auto comps = components(g, d, k, kind, options);
  std::vector<IntersectionRecord> out;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const auto& shallow = comps[i];
      const auto& deep = comps[j];
      IntersectionRecord rec;
      rec.shallow_e = shallow.e;
      rec.deep_e = deep.e;
      rec.image_r = deep.r;
      rec.fiber = {shallow.e, k, deep.r + 1, kind};
      if (k == 2 && options.printed_secdim) {
        int s = normalize_e(shallow.e, k, kind) / 2;
        rec.fiber_dim = sec_dim_printed(s, deep.r + 1, kind);
      } else {
        rec.fiber_dim = sub_dim(shallow.e, k, deep.r + 1, kind);
      }
      rec.total_dim = deep.support_dim + rec.fiber_dim;
      out.push_back(rec);
    }
  return out;
}

ComponentCount component_count(int g, int d, int k, TensorKind kind, const AtlasOptions& options)
{
  ComponentCount out;
  for (const auto& c : components(g, d, k, kind, options)) out.enumerated += c.multiplicity;

  const std::int64_t low = small_r(g, d);
  const std::int64_t size = big_R(g, d) - low + 1;
  if (k == 2)
    out.paper_formula = size / 2 + (low % 2 == 0 ? 1 : 0);
  else if (kind == TensorKind::skew)
    out.paper_formula = (size - 1) - (k - low);
  else
    out.paper_formula = size - 1;
  if (auto points = w_top_points(g, d)) out.paper_formula += *points - 1;

  out.agrees = out.enumerated == out.paper_formula;
  return out;
}

CanonicalReport canonical_analysis(int g, int k)
{
  if (g < 3) throw std::invalid_argument("canonical analysis needs g >= 3, got " + std::to_string(g));
  if (k < 2 || k >= g)
    throw std::invalid_argument("canonical analysis needs 2 <= k < g, got k = " + std::to_string(k));

  CanonicalReport out;
  out.g = g;
  out.k = k;
  out.dim_canonical = binomial(g, k) - 1;
  out.dim_main = g + binomial(g - 1, k) - 1;
  out.gap = binomial(g - 1, k - 1) - g;
  out.exorbitant = (k >= 3 && out.gap > 0) || (k == 2 && g % 2 == 0);
  out.locus = {g - 1, k, g, TensorKind::skew};
  out.locus_codim = binomial(g - 1, k - 1) - (g - 1);
  out.locus_codim_subdim = out.dim_canonical - sub_dim(g - 1, k, g, TensorKind::skew);
  return out;
}

} // namespace divatlas
