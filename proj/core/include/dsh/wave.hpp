#pragma once

#include "dsh/bump.hpp"
#include "dsh/quadrature.hpp"

namespace dsh::wave {

/// Mean of phi over the sphere of radius s centered at distance r_center
/// from the origin. Radial reduction:
///   mean = 1/(2 r s) * Int_{|r-s|}^{r+s} rho phi(rho) d rho,   r > 0,
///   mean = phi(s),                                             r = 0.
double spherical_mean(const RadialBump& phi, double r_center, double s);

/// Kirchhoff solution of V_tt = Lap V, V(.,0) = 0, V_t(.,0) = phi:
/// V(x, s) = s * spherical mean. At the origin V(0,s) = s phi(s).
double V_of(const RadialBump& phi, double r_center, double s);

/// v = dV/ds, the solution with v(.,0) = phi, v_t(.,0) = 0. Analytic
/// derivative of the closed radial form, not a finite difference.
double v_of(const RadialBump& phi, double r_center, double s);

/// Radial derivative dV/dr_center (the x3 derivative on the axis).
double dV_dr(const RadialBump& phi, double r_center, double s);

/// Int_0^q V(r_center, s) s ds, the non-sharp part of the M = 3H/2 kernel
/// application.
double V_moment(const RadialBump& phi, double r_center, double q);

/// d/dr_center of V_moment.
double V_moment_dr(const RadialBump& phi, double r_center, double q);

}  // namespace dsh::wave
