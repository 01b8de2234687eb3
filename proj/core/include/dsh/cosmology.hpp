#pragma once

#include <cmath>
#include <optional>

#include "dsh/complex_utils.hpp"
#include "dsh/errors.hpp"

namespace dsh {

/// Hubble constant and complex mass. The effective Klein-Gordon masses
/// M+ = H/2 + i m and M- = H/2 - i m are always recomputed from (H, m).
struct CosmologyParams {
  double H = 1.0;
  cplx m = 0.0;

  CosmologyParams() = default;
  CosmologyParams(double H_, cplx m_) : H(H_), m(m_) {
    if (H == 0.0) throw PreconditionError("CosmologyParams: H must be nonzero");
  }

  cplx M_plus() const { return cplx(0.5 * H, 0.0) + cplx(0, 1) * m; }
  cplx M_minus() const { return cplx(0.5 * H, 0.0) - cplx(0, 1) * m; }
  bool expanding() const { return H > 0.0; }

  CosmologyParams mirrored() const { return CosmologyParams(H, -m); }
};

/// Derived quantities at a spacetime point: tau = e^{-Ht}, A = Hr, the
/// hypergeometric argument z and its exact complement 1-z. denom is the
/// light-cone factor (1+tau)^2 - A^2.
struct LightconeCoords {
  double r = 0.0, t = 0.0;
  double tau = 1.0, A = 0.0;
  double z = 0.0, one_minus_z = 1.0;
  double denom = 4.0;

  static LightconeCoords from_rt(double r, double t, double H) {
    return from_tau_A(std::exp(-H * t), H * r, r, t);
  }

  static LightconeCoords from_tau_A(double tau, double A, double r = 0.0,
                                    double t = 0.0) {
    LightconeCoords lc;
    lc.r = r;
    lc.t = t;
    lc.tau = tau;
    lc.A = A;
    const double omt = 1.0 - tau, opt = 1.0 + tau;
    lc.denom = opt * opt - A * A;
    if (std::abs(lc.denom) < 1e-12)
      throw DomainError("light-cone singularity: (1+tau)^2 - (Hr)^2 ~ 0");
    if (lc.denom < 0.0)
      throw DomainError("outside the light cone: (1+tau)^2 - (Hr)^2 < 0");
    lc.z = (omt * omt - A * A) / lc.denom;
    lc.one_minus_z = 4.0 * tau / lc.denom;
    if (std::abs(lc.z) >= 1.0)
      throw DomainError("outside the light cone: |z| >= 1");
    return lc;
  }
};

enum class MassTag {
  GENERIC,     // m off the lattice i(H/2)(1+ell)
  ODD_NEG,     // ell = 2k+1, k <= -3
  ODD_POS,     // ell = 2k+1, k >= 1
  EVEN_POS,    // ell = 2k,   k >= 1
  EVEN_NEG,    // ell = 2k,   k <= -2
  MINUS_HALF,  // m = -iH/2  (ell = -2)
  PLUS_HALF,   // m = +iH/2  (ell = 0)
  ZERO,        // m = 0      (ell = -1)
  PLUS_IH,     // m = +iH    (ell = 1)
  MINUS_IH,    // m = -iH    (ell = -3)
};

struct MassClass {
  MassTag tag = MassTag::GENERIC;
  std::optional<int> ell;

  /// k of the odd/even lattice parameterization; only valid off GENERIC.
  int k() const {
    if (!ell) throw PreconditionError("MassClass::k: GENERIC class has no ell");
    const int l = *ell;
    return (l % 2 == 0) ? l / 2 : (l - 1) / 2;
  }

  /// The classes whose origin tail vanishes identically.
  bool huygensian() const {
    return tag == MassTag::ZERO || tag == MassTag::PLUS_IH ||
           tag == MassTag::MINUS_IH;
  }

  bool on_lattice() const { return tag != MassTag::GENERIC; }
};

}  // namespace dsh
