#pragma once

#include <cstddef>

#include "dsh/complex_utils.hpp"

namespace dsh::specfun {

/// Tolerances and caps for the hypergeometric evaluators. All values are
/// overridable per call; the defaults are the shipped configuration.
struct Hyp2F1Config {
  double series_tol = 1e-14;     // relative stop for the Gauss series
  double near_one_tol = 1e-13;   // relative stop for the 1-z expansions
  double series_radius = 0.75;   // |z| ceiling accepted by the direct series
  std::size_t max_terms = 1000000;
  double int_tol = 1e-9;         // integer detection for c-a-b and for a,b
};

enum class Hyp2F1Class {
  GENERIC,           // c-a-b not an integer: two-gamma connection formula
  C_EQ_AB_PLUS_M,    // c = a+b+m, m = 0,1,2,... : logarithmic expansion
  C_EQ_AB_MINUS_M,   // c = a+b-m, m = 1,2,...   : pole expansion
};

struct Hyp2F1Params {
  cplx a, b, c;

  /// Classifies c-a-b against the integer lattice; *offset receives m >= 0.
  Hyp2F1Class classify(double int_tol = 1e-9, int* offset = nullptr) const;
};

/// Complex gamma function, Lanczos approximation plus reflection.
/// Throws DomainError at nonpositive integers.
cplx gamma(cplx z);

/// 1/gamma; returns exactly 0 at the poles of gamma.
cplx rgamma(cplx z);

/// Complex digamma, asymptotic series after an upward shift.
/// Throws DomainError at nonpositive integers.
cplx digamma(cplx z);

/// Direct Gauss series; valid for |z| <= cfg.series_radius.
cplx hyp2f1_series(const Hyp2F1Params& p, cplx z, const Hyp2F1Config& cfg = {});

/// Connection-formula evaluation near z = 1, dispatching on classify():
/// the generic two-gamma formula, or the degenerate logarithmic expansions
/// when c-a-b is an integer. Requires |1-z| <= 0.6 and |arg(1-z)| < pi.
cplx hyp2f1_near_one(const Hyp2F1Params& p, cplx z, const Hyp2F1Config& cfg = {});

/// Same as hyp2f1_near_one but with 1-z supplied exactly by the caller
/// (avoids cancellation when z is close to 1).
cplx hyp2f1_near_one_w(const Hyp2F1Params& p, cplx one_minus_z,
                       const Hyp2F1Config& cfg = {});

/// Unified evaluator: terminating polynomial when a or b is a nonpositive
/// integer, direct series for |z| <= 0.5, connection formulas otherwise.
cplx hyp2f1(const Hyp2F1Params& p, cplx z, const Hyp2F1Config& cfg = {});

/// Unified evaluator with 1-z supplied exactly.
cplx hyp2f1_w(const Hyp2F1Params& p, cplx z, cplx one_minus_z,
              const Hyp2F1Config& cfg = {});

}  // namespace dsh::specfun
