#pragma once

#include <array>
#include <functional>
#include <optional>

#include "dsh/bump.hpp"
#include "dsh/cosmology.hpp"
#include "dsh/kernels.hpp"
#include "dsh/wave.hpp"

namespace dsh::solver {

/// Radial source term f(r, b) for the generalized Klein-Gordon problem,
/// with an explicit spatial support radius.
struct RadialSource {
  std::function<double(double r, double b)> f;
  double support_radius = 0.0;
};

struct KGProblem {
  cplx M;
  CosmologyParams cp;
  std::optional<RadialBump> varphi0;  // u(x,0)
  std::optional<RadialBump> varphi1;  // u_t(x,0)
  std::optional<RadialSource> source;
};

/// Scalar generalized Klein-Gordon solution
///   u = G[f] + e^{Ht/2} v_{phi0}(x, phi(t))
///     + 2 Int_0^{phi(t)} K0(s,t;M) v_{phi0}(x,s) ds
///     + 2 Int_0^{phi(t)} v_{phi1}(x,s) K1(s,t;M) ds .
cplx kg_solve(const KGProblem& p, double r_center, double t);

/// The K1 transform applied to radial data by direct quadrature:
///   2 Int_0^{phi(t)} K1(s,t;M) v_phi(x,s) ds .
cplx kappa1_apply(const RadialBump& phi, cplx M, const CosmologyParams& cp,
                  double r_center, double t);

/// Closed forms of the K1 transform at the exceptional masses:
///   M = +-H/2 : e^{Ht/2} V_phi(x, phi(t))
///   M = 3H/2  : the sharp three-term decomposition (two cone terms plus the
///               moment integral).
/// Throws PreconditionError for any other M.
cplx kappa1_closed(const RadialBump& phi, cplx M, const CosmologyParams& cp,
                   double r_center, double t);

/// Origin tail of the first spinor component for data (phi0, 0, 0, 0):
///   Psi_0(0,t) = 2 e^{-Ht} Int_0^eps (d/ds s phi0) (d/dt - H/2 - im) K1(s,t;M+) ds,
/// valid beyond the cone crossing, phi(t) > eps.
cplx dirac_tail_first(const RadialBump& phi0, const CosmologyParams& cp, double t);

/// Mirror probe for data (0, 0, phi2, 0):
///   Psi_2(0,t) = 2 e^{-Ht} Int_0^eps (d/ds s phi2) (d/dt - H/2 + im) K1(s,t;M-) ds.
cplx dirac_tail_second(const RadialBump& phi2, const CosmologyParams& cp, double t);

enum class SplitTag { FIRST_PAIR, SECOND_PAIR, FULL };

struct SpinorData {
  std::array<std::optional<RadialBump>, 4> phi;  // absent = identically zero
  SplitTag split = SplitTag::FULL;

  void validate() const;  // split tag must match the populated components
};

/// Dirac solution at the three huygensian masses, assembled from the sharp
/// closed forms. The spatial derivative terms are evaluated analytically for
/// radial data at a point on the x3 axis (distance r_center from the origin).
/// Supported pairings: m = 0 with any split, m = +iH with FIRST_PAIR,
/// m = -iH with SECOND_PAIR.
std::array<cplx, 4> dirac_special(const SpinorData& data,
                                  const CosmologyParams& cp, double r_center,
                                  double t);

}  // namespace dsh::solver
