#pragma once

#include "dsh/cosmology.hpp"
#include "dsh/specfun.hpp"

namespace dsh::kernels {

/// Null-cone radius phi(t) = (1 - e^{-Ht}) / H, cancellation-safe for
/// small Ht.
double phi_dist(double t, double H);

/// The hypergeometric transform kernel between emission time t0 and
/// observation time t:
///   E = 4^{-M/H} e^{M(t0+t)} ((e^{-H t0}+e^{-H t})^2 - (Hr)^2)^{M/H-1/2}
///       F(1/2 - M/H, 1/2 - M/H; 1; z).
/// Throws DomainError on or outside the light cone.
cplx kernel_E(double r, double t, double t0, cplx M, const CosmologyParams& cp);

/// K1(r,t;M) = E(r,t;0,0;M), evaluated through its explicit closed display.
cplx kernel_K1(double r, double t, cplx M, const CosmologyParams& cp);
cplx kernel_K1(const LightconeCoords& lc, cplx M, const CosmologyParams& cp);

/// K0 = -[d/db E(r,t;0,b;M)]_{b=0} by Richardson-extrapolated central
/// differences (steps h and h/2). h <= 0 selects the default step
/// 1e-5 * min(1, 1/|H|).
cplx kernel_K0(double r, double t, cplx M, const CosmologyParams& cp,
               double h = -1.0);

/// (d/dt - H/2 - i m) K1(r,t;M+), in the closed two-hypergeometric form.
/// Identically zero at m = 0.
cplx dirac_combo_plus(double r, double t, const CosmologyParams& cp);
cplx dirac_combo_plus(const LightconeCoords& lc, const CosmologyParams& cp);

/// (d/dt - H/2 + i m) K1(r,t;M-); equals dirac_combo_plus with m -> -m.
cplx dirac_combo_minus(double r, double t, const CosmologyParams& cp);
cplx dirac_combo_minus(const LightconeCoords& lc, const CosmologyParams& cp);

/// The lattice-mass bracket
///   scriptF = (1+tau)((1+tau)^2-A^2) F((l+1)/2,(l+1)/2;1;z)
///           + (l+1)(1-tau^2-A^2)     F((l+3)/2,(l+3)/2;2;z).
double script_F(double tau, double A, int ell);

/// Leading large-time value of the per-class bracket (the factor multiplying
/// the combo prefactor inside the origin-tail r-integral). Exact 0 for the
/// huygensian classes. Requires e^{-Ht} < 0.1 and r inside the class radius
/// bound.
cplx tail_asymptote(const MassClass& cls, const CosmologyParams& cp, double r,
                    double t);

/// Closed-form prediction of the origin tail, split as
///   predicted(t) = coeff(t) * Int_0^eps (d/dr r phi) weight(r, t) dr.
/// coeff carries every r-independent factor of the class's leading display;
/// weight the r-dependent (for one class also Ht-dependent) factor.
cplx tail_prediction_coeff(const MassClass& cls, const CosmologyParams& cp,
                           double t);
cplx tail_prediction_weight(const MassClass& cls, const CosmologyParams& cp,
                            double r, double t);

/// Class-specific radius bound inside which the leading asymptotics are
/// uniform (Hr must stay below it).
double class_radius_bound(const MassClass& cls, const CosmologyParams& cp);

/// The A = 0 leading constant of the class bracket, in the oracle-validated
/// form the predictions use...
cplx class_lead_coeff(const MassClass& cls, const CosmologyParams& cp);

/// ...and as displayed in the source material. The two differ for the
/// decaying lattice classes (ODD_NEG, EVEN_NEG), whose displayed corollary
/// coefficients do not reproduce the bracket they summarize.
cplx class_lead_coeff_displayed(const MassClass& cls, const CosmologyParams& cp);

}  // namespace dsh::kernels
