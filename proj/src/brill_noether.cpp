#include "divatlas/brill_noether.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace divatlas {

CurveParams::CurveParams(int genus, int degree) : g(genus), d(degree)
{
  if (g < 2) throw std::invalid_argument("genus must be at least 2, got " + std::to_string(g));
  if (d < 1) throw std::invalid_argument("degree must be at least 1, got " + std::to_string(d));
}

std::int64_t rho(int g, int r, int d)
{
  return static_cast<std::int64_t>(g) - static_cast<std::int64_t>(r + 1) * (g - d + r);
}

std::optional<int> w_dim(int g, int r, int d)
{
  std::int64_t p = rho(g, r, d);
  if (p < 0) return std::nullopt;
  return static_cast<int>(std::min<std::int64_t>(g, p));
}

int big_R(int g, int d)
{
  CurveParams params(g, d);
  // larger root of -r^2 - (g-d+1) r + d is (a + sqrt(a^2 + 4d)) / 2, a = d-g-1;
  // with s = isqrt(a^2 + 4d) the floor is floor((a + s) / 2) and a + s >= 0
  Integer a = d - g - 1;
  Integer disc = a * a + 4 * d;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
  Integer sum = a + s;
  Integer half;
  mpz_fdiv_q_ui(half.get_mpz_t(), sum.get_mpz_t(), 2);
  int out = static_cast<int>(half.get_si());

  if (rho(g, out, d) < 0 || rho(g, out + 1, d) >= 0)
    throw std::logic_error("R_d root bracketing failed for g=" + std::to_string(g) + ", d=" + std::to_string(d));
  return out;
}

int small_r(int g, int d)
{
  CurveParams params(g, d);
  return std::max(0, d - g);
}

std::vector<int> achieved_r(int g, int d)
{
  std::vector<int> out;
  for (int r = small_r(g, d), top = big_R(g, d); r <= top; ++r) out.push_back(r);
  return out;
}

Rational lambda_grd(int g, int r, int d)
{
  if (r < 0) throw std::domain_error("lambda(g, r, d) needs r >= 0");
  Rational out = 1;
  for (int i = 0; i <= r; ++i) {
    int denom_arg = g - d + r + i;
    if (denom_arg < 0)
      throw std::domain_error("lambda(g, r, d): negative factorial argument " + std::to_string(denom_arg) +
                              " (rho < 0 misuse)");
    Rational factor(factorial(i), factorial(denom_arg));
    factor.canonicalize();
    out *= factor;
  }
  return out;
}

std::optional<std::int64_t> w_top_points(int g, int d)
{
  int top = big_R(g, d);
  if (rho(g, top, d) != 0) return std::nullopt;
  Rational count = Rational(factorial(g)) * lambda_grd(g, top, d);
  if (count.get_den() != 1) throw std::logic_error("g! * lambda is not an integer");
  return count.get_num().get_si();
}

} // namespace divatlas
