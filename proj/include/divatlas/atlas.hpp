#pragma once

#include "divatlas/subspace_geometry.hpp"
#include "divatlas/tensor.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace divatlas {

// Divisor varieties Div^lambda(C_k) for lambda = n(d) (determinant bundles
// N_L, sections in the k-th exterior power of H^0(L)) or t(d) (symmetrized
// bundles T_L, sections in the k-th symmetric power). Skew kind <-> n(d),
// sym kind <-> t(d).

struct AtlasOptions {
  SymMaxMode sym_mode = SymMaxMode::faithful;
  /// Report k = 2 intersection fibers with sec_dim_printed instead of the
  /// determinantal dimensions.
  bool printed_secdim = false;

  friend bool operator==(const AtlasOptions&, const AtlasOptions&) = default;
};

/// One irreducible component: the closure of the divisors over the stratum
/// W^r_d \ W^{r+1}_d, whose generic fiber is the full linear system.
struct ComponentRecord {
  int r = 0;                        // support is W^r_d
  int e = 0;                        // maximal enclosing dimension on that stratum
  std::int64_t support_dim = 0;
  std::int64_t fiber_dim = 0;       // generic fiber P^fiber_dim
  std::int64_t total_dim = 0;
  std::int64_t multiplicity = 1;    // > 1 only for a zero-dimensional top stratum
  bool is_resolution = false;

  friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct FiberDescriptor {
  int e = 0;
  int k = 0;
  int ambient = 0;
  TensorKind kind = TensorKind::skew;

  friend bool operator==(const FiberDescriptor&, const FiberDescriptor&) = default;
};

/// Intersection of the components with enclosing bounds shallow_e < deep_e:
/// it maps onto W^{image_r}_d (the deeper support) with generic fiber
/// Sub_{shallow_e} of the k-th power of Q^{deep.r + 1}.
struct IntersectionRecord {
  int shallow_e = 0;
  int deep_e = 0;
  int image_r = 0;
  FiberDescriptor fiber;
  std::int64_t fiber_dim = 0;
  std::int64_t total_dim = 0;

  friend bool operator==(const IntersectionRecord&, const IntersectionRecord&) = default;
};

struct ComponentCount {
  std::int64_t enumerated = 0;
  std::int64_t paper_formula = 0;
  bool agrees = false;

  friend bool operator==(const ComponentCount&, const ComponentCount&) = default;
};

struct CanonicalReport {
  int g = 0;
  int k = 0;
  std::int64_t dim_canonical = 0;     // dim |K_{C_k}| = C(g,k) - 1
  std::int64_t dim_main = 0;          // g + C(g-1,k) - 1
  std::int64_t gap = 0;               // C(g-1,k-1) - g
  bool exorbitant = false;
  FiberDescriptor locus;              // Sub_{g-1} of the k-th exterior power of Q^g
  std::int64_t locus_codim = 0;       // C(g-1,k-1) - (g-1)
  std::int64_t locus_codim_subdim = 0; // dim |K_{C_k}| - sub_dim(g-1, k, g)

  friend bool operator==(const CanonicalReport&, const CanonicalReport&) = default;
};

/// Dimension of the projectivized section space: C(r+1,k) - 1 (skew) or
/// C(r+k,k) - 1 (sym); -1 means the linear system is empty.
std::int64_t fiber_dim(int r, int k, TensorKind kind);

/// A divisor with enclosing dimension enc_value deforms out to the stratum
/// W^{r_target} iff enc_value <= e_max(k, r_target + 1).
bool deformable(int enc_value, int k, int r_target, TensorKind kind, SymMaxMode mode = SymMaxMode::faithful);

/// (r, e) for every achieved r with a nonempty linear system whose bound
/// e = e_max(k, r+1) strictly exceeds the bounds of all smaller achieved r.
/// Throws std::invalid_argument unless g >= 2, d >= 1, k >= 2.
std::vector<std::pair<int, int>> jump_strata(int g, int d, int k, TensorKind kind,
                                             SymMaxMode mode = SymMaxMode::faithful);

std::vector<ComponentRecord> components(int g, int d, int k, TensorKind kind, const AtlasOptions& options = {});

/// One record per pair of components, ordered by (shallow_e, deep_e).
std::vector<IntersectionRecord> intersections(int g, int d, int k, TensorKind kind,
                                              const AtlasOptions& options = {});

/// Enumerated count (sum of multiplicities) next to the closed-form count
///  k = 2        floor(|R_d|/2) + eps, eps = 1 if r_d is even
///  k >= 3, n(d) (|R_d| - 1) - (k - r_d)
///  k >= 3, t(d) |R_d| - 1
/// plus g! lambda(g, R_d, d) - 1 when rho(g, R_d, d) = 0.
ComponentCount component_count(int g, int d, int k, TensorKind kind, const AtlasOptions& options = {});

/// Canonical class of C_k against the main paracanonical component.
/// Throws std::invalid_argument unless g >= 3 and 2 <= k < g.
CanonicalReport canonical_analysis(int g, int k);

} // namespace divatlas
