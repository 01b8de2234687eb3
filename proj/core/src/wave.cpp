#include "dsh/wave.hpp"

#include <algorithm>
#include <cmath>

namespace dsh::wave {

namespace {

constexpr double kAxisTol = 1e-9;

// Int_0^rho u phi(u) du, clipped to the support.
double profile_moment(const RadialBump& phi, double rho) {
  const double hi = std::min(rho, phi.eps);
  if (hi <= 0.0) return 0.0;
  return quad::integrate([&](double u) { return u * phi.value(u); }, 0.0, hi,
                         {.abs_tol = 1e-14, .rel_tol = 1e-12,
                          .what = "bump radial moment"});
}

}  // namespace

double spherical_mean(const RadialBump& phi, double r_center, double s) {
  if (s <= 0.0) return phi.value(r_center);
  if (r_center < kAxisTol) return phi.value(s);
  const double lo = std::abs(r_center - s), hi = r_center + s;
  if (lo >= phi.eps) return 0.0;  // sphere misses the support
  return (profile_moment(phi, hi) - profile_moment(phi, lo)) /
         (2.0 * r_center * s);
}

double V_of(const RadialBump& phi, double r_center, double s) {
  if (s <= 0.0) return 0.0;
  if (r_center < kAxisTol) return s * phi.value(s);
  const double lo = std::abs(r_center - s), hi = r_center + s;
  if (lo >= phi.eps) return 0.0;
  return (profile_moment(phi, hi) - profile_moment(phi, lo)) / (2.0 * r_center);
}

double v_of(const RadialBump& phi, double r_center, double s) {
  if (s <= 0.0) return phi.value(r_center);
  if (r_center < kAxisTol) return phi.value(s) + s * phi.deriv(s);
  // d/ds of the closed 1D integral: boundary terms with the even extension
  const double p = r_center + s, q = r_center - s;
  return (p * phi.value(p) + q * phi.value(std::abs(q))) / (2.0 * r_center);
}

double dV_dr(const RadialBump& phi, double r_center, double s) {
  if (s <= 0.0) return 0.0;
  if (r_center < kAxisTol) return 0.0;  // V is even in r_center
  const double p = r_center + s, q = r_center - s;
  const double V = V_of(phi, r_center, s);
  return -V / r_center +
         (p * phi.value(p) - q * phi.value(std::abs(q))) / (2.0 * r_center);
}

double V_moment(const RadialBump& phi, double r_center, double q) {
  if (q <= 0.0) return 0.0;
  // V(r_center, s) vanishes outside s in [r_center - eps, r_center + eps]
  const double lo = std::max(0.0, r_center - phi.eps);
  const double hi = std::min(q, r_center + phi.eps);
  if (hi <= lo) return 0.0;
  return quad::integrate([&](double s) { return V_of(phi, r_center, s) * s; },
                         lo, hi,
                         {.abs_tol = 1e-13, .rel_tol = 1e-11,
                          .what = "V moment integral"});
}

double V_moment_dr(const RadialBump& phi, double r_center, double q) {
  if (q <= 0.0 || r_center < kAxisTol) return 0.0;
  const double lo = std::max(0.0, r_center - phi.eps);
  const double hi = std::min(q, r_center + phi.eps);
  if (hi <= lo) return 0.0;
  return quad::integrate([&](double s) { return dV_dr(phi, r_center, s) * s; },
                         lo, hi,
                         {.abs_tol = 1e-13, .rel_tol = 1e-11,
                          .what = "V moment radial derivative"});
}

}  // namespace dsh::wave
