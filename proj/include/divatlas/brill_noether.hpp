#pragma once

#include "divatlas/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace divatlas {

/// Genus and degree of a Petri-general curve and a line bundle on it.
struct CurveParams {
  int g;
  int d;

  /// Throws std::invalid_argument unless g >= 2 and d >= 1.
  CurveParams(int genus, int degree);
};

/// Brill-Noether number g - (r+1)(g - d + r).
std::int64_t rho(int g, int r, int d);

/// dim W^r_d = min(g, rho) on a Petri-general curve; nullopt when rho < 0
/// and the locus is empty.
std::optional<int> w_dim(int g, int r, int d);

/// R_d: the largest r with rho(g, r, d) >= 0, computed as the floor of the
/// larger root of rho viewed as a quadratic in r via an exact integer
/// square root. Validates g >= 2, d >= 1.
int big_R(int g, int d);
/// r_d = max(0, d - g).
int small_r(int g, int d);
/// [r_d, ..., R_d]: every h^0(L) - 1 realized in Pic^d.
std::vector<int> achieved_r(int g, int d);

/// prod_{i=0}^{r} i! / (g - d + r + i)!. Throws std::domain_error when a
/// factorial argument is negative.
Rational lambda_grd(int g, int r, int d);

/// Number of points of W^{R_d}_d, g! * lambda(g, R_d, d), when that locus is
/// zero-dimensional (rho(g, R_d, d) = 0); nullopt otherwise.
std::optional<std::int64_t> w_top_points(int g, int d);

} // namespace divatlas
