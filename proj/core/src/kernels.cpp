#include "dsh/kernels.hpp"

#include <cmath>
#include <numbers>

#include "dsh/errors.hpp"

namespace dsh::kernels {

namespace {

using specfun::Hyp2F1Params;
using specfun::hyp2f1_w;
using specfun::gamma;
using specfun::rgamma;

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

const cplx kI{0.0, 1.0};

double real_gamma(double x) { return gamma(cplx(x, 0.0)).real(); }

}  // namespace

double phi_dist(double t, double H) {
  if (t < 0.0) throw PreconditionError("phi_dist requires t >= 0");
  return -std::expm1(-H * t) / H;
}

cplx kernel_E(double r, double t, double t0, cplx M, const CosmologyParams& cp) {
  const double H = cp.H;
  const double e0 = std::exp(-H * t0), e1 = std::exp(-H * t);
  const double sum = e0 + e1, dif = e1 - e0;
  const double base = sum * sum - (H * r) * (H * r);
  if (std::abs(base) < 1e-12)
    throw DomainError("kernel E on the light cone: base ~ 0");
  if (base < 0.0)
    throw DomainError("kernel E outside the light cone: base < 0");
  const double num = dif * dif - (H * r) * (H * r);
  const double z = num / base;
  if (std::abs(z) >= 1.0)
    throw DomainError("kernel E outside the light cone: |z| >= 1");
  const double w = 4.0 * e0 * e1 / base;  // 1 - z, computed without cancellation
  const cplx MH = M / H;
  const cplx alpha = 0.5 - MH;
  const cplx F = hyp2f1_w({alpha, alpha, 1.0}, z, w);
  return std::exp(-MH * (2.0 * kLn2)) * std::exp(M * (t0 + t)) *
         pow_pos(base, MH - 0.5) * F;
}

cplx kernel_K1(const LightconeCoords& lc, cplx M, const CosmologyParams& cp) {
  const cplx MH = M / cp.H;
  const cplx alpha = 0.5 - MH;
  const cplx F = hyp2f1_w({alpha, alpha, 1.0}, lc.z, lc.one_minus_z);
  return std::exp(-MH * (2.0 * kLn2)) * std::exp(M * lc.t) *
         pow_pos(lc.denom, MH - 0.5) * F;
}

cplx kernel_K1(double r, double t, cplx M, const CosmologyParams& cp) {
  return kernel_K1(LightconeCoords::from_rt(r, t, cp.H), M, cp);
}

cplx kernel_K0(double r, double t, cplx M, const CosmologyParams& cp, double h) {
  if (h <= 0.0) h = 1e-5 * std::min(1.0, 1.0 / std::abs(cp.H));
  const auto central = [&](double step) {
    return (kernel_E(r, t, step, M, cp) - kernel_E(r, t, -step, M, cp)) /
           (2.0 * step);
  };
  const cplx d1 = central(h);
  const cplx d2 = central(0.5 * h);
  return -(4.0 * d2 - d1) / 3.0;
}

cplx dirac_combo_plus(const LightconeCoords& lc, const CosmologyParams& cp) {
  if (cp.m == 0.0) return 0.0;  // the prefactor carries an exact factor i m
  const double H = cp.H;
  const cplx im = kI * cp.m;
  const cplx imH = im / H;
  const cplx F2 = hyp2f1_w({1.0 - imH, 1.0 - imH, 2.0}, lc.z, lc.one_minus_z);
  const cplx F1 = hyp2f1_w({-imH, -imH, 1.0}, lc.z, lc.one_minus_z);
  const double inner = 1.0 - lc.tau * lc.tau - lc.A * lc.A;
  const cplx brace =
      2.0 * imH * inner * F2 - (1.0 + lc.tau) * lc.denom * F1;
  const cplx pref = std::exp(-imH * (2.0 * kLn2)) * im *
                    std::exp(0.5 * lc.t * (2.0 * im - H)) *
                    pow_pos(lc.denom, imH - 2.0);
  return pref * brace;
}

cplx dirac_combo_plus(double r, double t, const CosmologyParams& cp) {
  return dirac_combo_plus(LightconeCoords::from_rt(r, t, cp.H), cp);
}

cplx dirac_combo_minus(const LightconeCoords& lc, const CosmologyParams& cp) {
  return dirac_combo_plus(lc, cp.mirrored());
}

cplx dirac_combo_minus(double r, double t, const CosmologyParams& cp) {
  return dirac_combo_plus(r, t, cp.mirrored());
}

double script_F(double tau, double A, int ell) {
  const double opt = 1.0 + tau;
  const double denom = opt * opt - A * A;
  if (denom <= 1e-12)
    throw DomainError("script_F: (1+tau)^2 - A^2 must be positive");
  const double num = (1.0 - tau) * (1.0 - tau) - A * A;
  const double z = num / denom;
  const double w = 4.0 * tau / denom;
  const cplx a1{0.5 * (ell + 1), 0.0}, a2{0.5 * (ell + 3), 0.0};
  const cplx F1 = hyp2f1_w({a1, a1, 1.0}, z, w);
  const cplx F2 = hyp2f1_w({a2, a2, 2.0}, z, w);
  const double inner = 1.0 - tau * tau - A * A;
  return (opt * denom * F1 + double(ell + 1) * inner * F2).real();
}

double class_radius_bound(const MassClass& cls, const CosmologyParams& cp) {
  // A = Hr must stay below the bound; for the decaying lattice classes that
  // is where the leading coefficient's A-part keeps its sign.
  if (cls.tag == MassTag::ODD_NEG)
    return std::min(0.5, 1.0 / std::sqrt(double(-2 * cls.k() - 3)));
  if (cls.tag == MassTag::EVEN_NEG)
    return std::min(0.5, 1.0 / std::sqrt(double(-2 * (cls.k() + 1))));
  if (cls.tag == MassTag::GENERIC)
    return std::min(0.5, 0.5 * std::abs(cp.H));  // r <= min{1/2, 1/(2H)} on A = Hr
  return 0.5;
}

cplx class_lead_coeff(const MassClass& cls, const CosmologyParams& cp) {
  const double H = cp.H;
  switch (cls.tag) {
    case MassTag::ZERO:
    case MassTag::PLUS_IH:
    case MassTag::MINUS_IH:
      return 0.0;
    case MassTag::GENERIC: {
      const cplx imH = kI * cp.m / H;
      const cplx rg = rgamma(1.0 - imH);
      return 2.0 * imH * std::exp(imH * 4.0 * kLn2) * gamma(-2.0 * imH) * rg * rg;
    }
    case MassTag::ODD_NEG: {
      const int k = cls.k();
      const double gk = real_gamma(double(-k));
      return -2.0 * double(k + 1) * real_gamma(double(-2 * k - 3)) / (gk * gk);
    }
    case MassTag::ODD_POS: {
      const int k = cls.k();
      const double g = real_gamma(double(k + 2));
      return double(2 * k + 2) * std::pow(4.0, -2 * k - 2) *
             real_gamma(double(2 * k + 2)) / (g * g);
    }
    case MassTag::EVEN_POS: {
      const int k = cls.k();
      const double g = real_gamma(k + 1.5);
      return double(2 * k + 1) * std::pow(4.0, -(2 * k + 1)) *
             real_gamma(double(2 * k + 1)) / (g * g);
    }
    case MassTag::EVEN_NEG: {
      const int k = cls.k();
      const double g = real_gamma(0.5 - k);
      return double(2 * k + 1) * real_gamma(double(-2 * k - 1)) /
             (2.0 * double(k + 1) * g * g);
    }
    case MassTag::MINUS_HALF:
      return 4.0 / kPi;
    case MassTag::PLUS_HALF:
      return 1.0 / kPi;
  }
  throw DomainError("class_lead_coeff: unreachable");
}

cplx class_lead_coeff_displayed(const MassClass& cls, const CosmologyParams& cp) {
  if (cls.tag == MassTag::ODD_NEG) {
    const int k = cls.k();
    const double gk = real_gamma(double(-k));
    return 2.0 * double(k + 1) / (gk * gk) *
           ((12.0 * k + 19.0) * real_gamma(double(-2 * k - 3)) + 4.0 * gk * gk);
  }
  if (cls.tag == MassTag::EVEN_NEG) {
    const int k = cls.k();
    const double g = real_gamma(0.5 - k);
    return double(2 * k + 1) * real_gamma(double(-2 * k)) /
           (2.0 * double(k + 1) * g * g);
  }
  return class_lead_coeff(cls, cp);
}

namespace {

void check_asymptote_domain(const MassClass& cls, const CosmologyParams& cp,
                            double A, double tau) {
  if (cp.H <= 0.0)
    throw PreconditionError("tail asymptotics require an expanding universe (H > 0)");
  if (tau >= 0.1)
    throw PreconditionError("tail asymptotics require e^{-Ht} < 0.1");
  if (A >= class_radius_bound(cls, cp))
    throw DomainError("tail asymptote: Hr outside the class radius bound");
}

}  // namespace

cplx tail_asymptote(const MassClass& cls, const CosmologyParams& cp, double r,
                    double t) {
  const double H = cp.H;
  const double tau = std::exp(-H * t), A = H * r;
  check_asymptote_domain(cls, cp, A, tau);
  const double oma = 1.0 - A * A;
  switch (cls.tag) {
    case MassTag::ZERO:
    case MassTag::PLUS_IH:
    case MassTag::MINUS_IH:
      return 0.0;
    case MassTag::GENERIC: {
      const cplx imH = kI * cp.m / H;
      const cplx g = gamma(-2.0 * imH);
      const cplx rg = rgamma(1.0 - imH);
      return 2.0 * imH * std::exp(imH * (4.0 * kLn2)) * g * rg * rg *
             pow_pos(oma, 1.0 - 2.0 * imH) * std::exp(-2.0 * kI * cp.m * t);
    }
    case MassTag::ODD_NEG: {
      // The displayed corollary coefficient does not reproduce the bracket;
      // the value below is re-derived from the terminating-sum expansions
      // and validated against direct evaluation (see the class tests).
      const int k = cls.k();
      const double gk = real_gamma(double(-k));
      return -2.0 * double(k + 1) * real_gamma(double(-2 * k - 3)) / (gk * gk) *
             (1.0 + double(2 * k + 3) * A * A) * tau;
    }
    case MassTag::ODD_POS: {
      const int k = cls.k();
      const double gnum = real_gamma(double(2 * k + 2));
      const double gden = real_gamma(double(k + 2));
      return double(2 * k + 2) * std::pow(oma, 3 + 2 * k) *
             std::pow(4.0, -2 * k - 2) * std::exp(H * double(2 * k + 2) * t) *
             gnum / (gden * gden);
    }
    case MassTag::EVEN_POS: {
      const int k = cls.k();
      const double gnum = real_gamma(double(2 * k + 1));
      const double gden = real_gamma(k + 1.5);
      return double(2 * k + 1) * std::pow(oma, 2 * k + 2) *
             std::pow(4.0, -(2 * k + 1)) * std::exp(H * double(2 * k + 1) * t) *
             gnum / (gden * gden);
    }
    case MassTag::EVEN_NEG: {
      // re-derived coefficient, as for ODD_NEG
      const int k = cls.k();
      const double gden = real_gamma(0.5 - k);
      return tau * double(2 * k + 1) / (2.0 * double(k + 1)) *
             real_gamma(double(-2 * k - 1)) / (gden * gden) *
             (1.0 + 2.0 * double(k + 1) * A * A);
    }
    case MassTag::MINUS_HALF:
      return -tau * (4.0 / kPi) *
             (A * A - std::log(4.0 * oma) - H * t + 1.0);
    case MassTag::PLUS_HALF:
      return oma * oma * std::exp(H * t) / kPi;
  }
  throw DomainError("tail_asymptote: unreachable");
}

cplx tail_prediction_coeff(const MassClass& cls, const CosmologyParams& cp,
                           double t) {
  const double H = cp.H;
  if (H <= 0.0)
    throw PreconditionError("tail prediction requires an expanding universe (H > 0)");
  switch (cls.tag) {
    case MassTag::ZERO:
    case MassTag::PLUS_IH:
    case MassTag::MINUS_IH:
      return 0.0;
    case MassTag::GENERIC: {
      const cplx imH = kI * cp.m / H;
      const cplx rg = rgamma(1.0 - imH);
      return -(cp.m * cp.m / H) * std::exp((2.0 + 2.0 * imH) * kLn2) *
             std::exp(-0.5 * (3.0 * H + 2.0 * kI * cp.m) * t) *
             gamma(-2.0 * imH) * rg * rg;
    }
    case MassTag::ODD_NEG: {
      const int k = cls.k();
      const double gk = real_gamma(double(-k));
      return -H * std::pow(2.0, 2 * k + 2) * double(2 * k + 2) *
             double(2 * k + 2) * real_gamma(double(-2 * k - 3)) *
             std::exp(-0.5 * H * double(2 * k + 7) * t) / (gk * gk);
    }
    case MassTag::ODD_POS: {
      const int k = cls.k();
      const double gden = real_gamma(double(k + 2));
      return std::pow(2.0, -2 * k - 2) * H * double(2 * k + 2) *
             double(2 * k + 2) * real_gamma(double(2 * k + 2)) / (gden * gden) *
             std::exp(0.5 * H * double(2 * k - 1) * t);
    }
    case MassTag::EVEN_POS: {
      const int k = cls.k();
      const double gden = real_gamma(k + 1.5);
      return H * std::pow(2.0, -2 * k - 1) * double(2 * k + 1) *
             double(2 * k + 1) * real_gamma(double(2 * k + 1)) / (gden * gden) *
             std::exp(H * double(k - 1) * t);
    }
    case MassTag::EVEN_NEG: {
      const int k = cls.k();
      const double gden = real_gamma(0.5 - k);
      return H * std::pow(2.0, 2 * k + 1) * double(2 * k + 1) *
             double(2 * k + 1) * real_gamma(double(-2 * k - 1)) /
             (2.0 * double(k + 1) * gden * gden) *
             std::exp(-H * double(k + 3) * t);
    }
    case MassTag::MINUS_HALF:
      return (2.0 * H / kPi) * std::exp(-2.0 * H * t);
    case MassTag::PLUS_HALF:
      return (2.0 * H / kPi) * std::exp(-H * t);
  }
  throw DomainError("tail_prediction_coeff: unreachable");
}

cplx tail_prediction_weight(const MassClass& cls, const CosmologyParams& cp,
                            double r, double t) {
  const double A = cp.H * r;
  const double oma = 1.0 - A * A;
  if (oma <= 0.0)
    throw DomainError("tail prediction weight: Hr must be < 1");
  switch (cls.tag) {
    case MassTag::ZERO:
      return 0.0;
    case MassTag::PLUS_IH:
    case MassTag::MINUS_IH:
      return 1.0;  // degenerate constant weight: the r-integral telescopes to 0
    case MassTag::GENERIC: {
      const cplx imH = kI * cp.m / cp.H;
      return pow_pos(oma, -1.0 - imH);
    }
    case MassTag::ODD_NEG: {
      const int k = cls.k();
      return std::pow(oma, -(k + 3)) * (1.0 + double(2 * k + 3) * A * A);
    }
    case MassTag::ODD_POS:
      return std::pow(oma, cls.k());
    case MassTag::EVEN_POS:
      return std::pow(oma, 0.5 * (2 * cls.k() - 1));
    case MassTag::EVEN_NEG: {
      const int k = cls.k();
      return std::pow(oma, -0.5 * (2 * k + 5)) *
             (1.0 + 2.0 * double(k + 1) * A * A);
    }
    case MassTag::MINUS_HALF:
      return std::pow(oma, -1.5) *
             (A * A - std::log(4.0 * oma) - cp.H * t + 1.0);
    case MassTag::PLUS_HALF:
      return std::pow(oma, -0.5);
  }
  throw DomainError("tail_prediction_weight: unreachable");
}

}  // namespace dsh::kernels
