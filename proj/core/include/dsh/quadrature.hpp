#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "dsh/complex_utils.hpp"
#include "dsh/errors.hpp"

namespace dsh::quad {

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  // evaluation-noise level of the integrand, relative to its sampled
  // magnitude; the accepted error never chases below noise_rel*max|f|*(b-a)
  double noise_rel = 2e-14;
  int max_depth = 48;
  const char* what = "integral";  // names the integral in error messages
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1,1].
inline constexpr double kNodes[8] = {
    0.000000000000000, 0.405845151377397, 0.741531185599394,
    0.949107912342759, 0.207784955007898, 0.586087235467691,
    0.864864423359769, 0.991455371120813};
inline constexpr double kGaussW[8] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870, 0.0, 0.0, 0.0, 0.0};
inline constexpr double kKronrodW[8] = {
    0.209482141084728, 0.190350578064785, 0.140653259715525,
    0.063092092629979, 0.204432940075298, 0.169004726639267,
    0.104790010322250, 0.022935322010529};

template <class F, class R>
void gk15(const F& f, double a, double b, R* value, double* err, double* fmax) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  R y0 = f(mid);
  double fm = std::abs(y0);
  R g = kGaussW[0] * y0;
  R k = kKronrodW[0] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNodes[i];
    R yp = f(mid + dx), ym = f(mid - dx);
    fm = std::max({fm, std::abs(yp), std::abs(ym)});
    R yi = yp + ym;
    if (i < 4) g += kGaussW[i] * yi;
    k += kKronrodW[i] * yi;
  }
  g *= half;
  k *= half;
  *value = k;
  *err = std::abs(g - k);  // conservative: |G7 - K15| bounds the K15 error
  if (fmax) *fmax = fm;
}

template <class F, class R>
R adapt(const F& f, double a, double b, double tol_here, const QuadOptions& o,
        int depth) {
  R v{};
  double err = 0.0;
  gk15<F, R>(f, a, b, &v, &err, nullptr);
  if (err <= tol_here) return v;
  if (depth >= o.max_depth)
    throw QuadratureError(std::string("quadrature failed to converge in ") +
                          o.what + " on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  const double mid = 0.5 * (a + b);
  return adapt<F, R>(f, a, mid, 0.5 * tol_here, o, depth + 1) +
         adapt<F, R>(f, mid, b, 0.5 * tol_here, o, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (G7/K15) integration of a real- or complex-valued
/// integrand over [a, b]. The accepted error is
///   max(abs_tol, rel_tol * |I|, noise floor)
/// where the noise floor is the double-precision rounding level of the
/// sampled integrand; it keeps integrals that are exactly zero by
/// cancellation from recursing forever. Throws QuadratureError when the
/// bisection depth is exhausted first.
template <class F>
auto integrate(const F& f, double a, double b, const QuadOptions& o = {}) {
  using R = decltype(f(a));
  if (a == b) return R{};
  R coarse{};
  double err = 0.0, fmax = 0.0;
  detail::gk15<F, R>(f, a, b, &coarse, &err, &fmax);
  const double noise = o.noise_rel * fmax * std::abs(b - a);
  const double tol =
      std::max({o.abs_tol, o.rel_tol * std::abs(coarse), noise});
  if (err <= tol) return coarse;
  return detail::adapt<F, R>(f, a, b, tol, o, 0);
}

}  // namespace dsh::quad
