#pragma once

#include <cmath>

#include "dsh/errors.hpp"

namespace dsh {

/// Compactly supported smooth radial datum
///   phi(r) = amp * exp(-1 / (1 - (r/eps)^2))   for r < eps,   0 otherwise.
/// All one-sided derivatives vanish at r = eps.
struct RadialBump {
  double eps = 0.1;
  double amp = 1.0;

  RadialBump() = default;
  RadialBump(double eps_, double amp_) : eps(eps_), amp(amp_) {
    if (!(eps > 0.0)) throw PreconditionError("RadialBump: eps must be > 0");
  }

  double value(double r) const {
    const double u = r / eps;
    if (!(u < 1.0) || u <= -1.0) return 0.0;
    const double q = 1.0 - u * u;
    return amp * std::exp(-1.0 / q);
  }

  double deriv(double r) const {
    const double u = r / eps;
    if (!(u < 1.0) || u <= -1.0) return 0.0;
    const double q = 1.0 - u * u;
    return value(r) * (-2.0 * u / (eps * q * q));
  }

  /// d/dr [ r * phi(r) ], the integrand factor of the origin tail formulas.
  double d_r_times(double r) const { return value(r) + r * deriv(r); }

  double operator()(double r) const { return value(r); }
};

}  // namespace dsh
