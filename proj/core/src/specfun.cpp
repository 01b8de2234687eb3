#include "dsh/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dsh/errors.hpp"

namespace dsh::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

// Lanczos, g = 7, 9 terms. Relative accuracy ~1e-14 on the shifted half
// plane, which the reflection formula carries to Re z < 1/2.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx gamma_positive_half(cplx z) {
  // valid for Re z >= 0.5
  cplx acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z - 1.0 + double(k));
  const cplx t = z + 6.5;
  return std::sqrt(2.0 * kPi) * std::exp((z - 0.5) * std::log(t) - t) * acc;
}

bool gamma_pole(cplx z, long long* n = nullptr) {
  return near_nonpositive_int(z, kPoleTol, n);
}

// psi asymptotic tail coefficients: B_{2k}/(2k), k = 1..7
constexpr double kPsiTail[7] = {1.0 / 12,  -1.0 / 120,      1.0 / 252, -1.0 / 240,
                                1.0 / 132, -691.0 / 32760., 1.0 / 12};

std::string param_str(const Hyp2F1Params& p, cplx z) {
  std::ostringstream os;
  os << "F(a=" << p.a << ", b=" << p.b << "; c=" << p.c << "; z=" << z << ")";
  return os.str();
}

// Terminating Gauss sum when a (or b) is the nonpositive integer -n.
cplx hyp2f1_terminating(const Hyp2F1Params& p, cplx z, long long n_a,
                        bool a_terminates, const Hyp2F1Config& cfg) {
  const long long n = -n_a;
  cplx a = a_terminates ? cplx(double(n_a), 0.0) : p.a;
  cplx b = a_terminates ? p.b : cplx(double(n_a), 0.0);
  if (!a_terminates) std::swap(a, b);  // a holds the exact integer
  long long c_int = 0;
  if (near_nonpositive_int(p.c, cfg.int_tol, &c_int) && -c_int < n)
    throw DomainError("hyp2f1: c pole inside terminating sum, " + param_str(p, z));
  cplx term = 1.0, sum = 1.0;
  for (long long j = 0; j < n; ++j) {
    term *= (a + double(j)) * (b + double(j)) / ((p.c + double(j)) * double(j + 1)) * z;
    sum += term;
  }
  return sum;
}

// Raw Gauss series with the 3-consecutive-small-terms stop rule.
cplx gauss_series(cplx a, cplx b, cplx c, cplx z, double tol, std::size_t cap,
                  const char* what) {
  cplx term = 1.0, sum = 1.0;
  int small_run = 0;
  for (std::size_t n = 0; n < cap; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
    sum += term;
    if (std::abs(term) < tol * std::abs(sum)) {
      if (++small_run >= 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError(std::string("hyp2f1: series term cap exceeded in ") + what);
}

// (15.3.6A): generic connection formula, c-a-b not an integer.
cplx near_one_generic(const Hyp2F1Params& p, cplx w, const Hyp2F1Config& cfg) {
  const cplx s = p.c - p.a - p.b;
  const cplx s1 = gauss_series(p.a, p.b, 1.0 - s, w, cfg.near_one_tol,
                               cfg.max_terms, "connection F(a,b;a+b-c+1;1-z)");
  const cplx s2 = gauss_series(p.c - p.a, p.c - p.b, 1.0 + s, w, cfg.near_one_tol,
                               cfg.max_terms, "connection F(c-a,c-b;c-a-b+1;1-z)");
  return gamma(p.c) * (gamma(s) * rgamma(p.c - p.a) * rgamma(p.c - p.b) * s1 +
                       std::exp(s * std::log(w)) * gamma(-s) * rgamma(p.a) *
                           rgamma(p.b) * s2);
}

// (A.2): c = a+b+m, m >= 0. Logarithmic expansion with the digamma series.
cplx near_one_log_plus(const Hyp2F1Params& p, cplx w, int m,
                       const Hyp2F1Config& cfg) {
  if (near_nonpositive_int(p.a, cfg.int_tol) || near_nonpositive_int(p.b, cfg.int_tol))
    throw DomainError("hyp2f1 logarithmic branch requires a,b != 0,-1,-2,...");
  const cplx a = p.a, b = p.b;
  const cplx lw = std::log(w);

  cplx finite = 0.0;
  if (m > 0) {
    cplx coef = 1.0, sum = 0.0;
    for (int n = 0; n < m; ++n) {
      sum += coef;
      coef *= (a + double(n)) * (b + double(n)) /
              ((1.0 - double(m) + double(n)) * double(n + 1)) * w;
    }
    finite = gamma(double(m)) * rgamma(a + double(m)) * rgamma(b + double(m)) * sum;
  }

  // h''_n = psi(n+1) + psi(n+m+1) - psi(a+n+m) - psi(b+n+m), updated
  // incrementally together with the series coefficient.
  double psi1 = -std::numbers::egamma;       // psi(n+1) at n = 0
  double psim = -std::numbers::egamma;       // psi(n+m+1) at n = 0
  for (int j = 1; j <= m; ++j) psim += 1.0 / j;
  cplx psia = digamma(a + double(m));
  cplx psib = digamma(b + double(m));

  double mfact = 1.0;
  for (int j = 2; j <= m; ++j) mfact *= j;
  cplx coef = 1.0 / mfact;  // 1/(n+m)! 1/n! at n = 0, as running factor
  cplx sum = 0.0;
  int small_run = 0;
  std::size_t n = 0;
  for (;; ++n) {
    if (n >= cfg.max_terms)
      throw ConvergenceError("hyp2f1: (A.2) series term cap exceeded");
    const cplx hpp = cplx(psi1 + psim, 0.0) - psia - psib;
    const cplx term = coef * (hpp - lw);
    sum += term;
    if (std::abs(term) < cfg.near_one_tol * std::abs(sum)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    coef *= (a + double(m) + double(n)) * (b + double(m) + double(n)) /
            (double(n + m + 1) * double(n + 1)) * w;
    psi1 += 1.0 / double(n + 1);
    psim += 1.0 / double(n + m + 1);
    psia += 1.0 / (a + double(m) + double(n));
    psib += 1.0 / (b + double(m) + double(n));
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const cplx log_part = sign * powi(w, m) * rgamma(a) * rgamma(b) * sum;
  return gamma(p.c) * (finite + log_part);
}

// (mBEA): c = a+b-m, m >= 1. Pole expansion: principal finite sum in
// (1-z)^{-m} plus the logarithmic series.
cplx near_one_log_minus(const Hyp2F1Params& p, cplx w, int m,
                        const Hyp2F1Config& cfg) {
  if (near_nonpositive_int(p.a, cfg.int_tol) || near_nonpositive_int(p.b, cfg.int_tol))
    throw DomainError("hyp2f1 pole branch requires a,b != 0,-1,-2,...");
  const cplx a = p.a, b = p.b;
  const cplx lw = std::log(w);

  cplx coef = 1.0, fsum = 0.0;
  for (int n = 0; n < m; ++n) {
    fsum += coef;
    coef *= (a - double(m) + double(n)) * (b - double(m) + double(n)) /
            ((1.0 - double(m) + double(n)) * double(n + 1)) * w;
  }
  const cplx principal =
      gamma(double(m)) * powi(w, -m) * rgamma(a) * rgamma(b) * fsum;

  cplx log_part = 0.0;
  const cplx ra = rgamma(a - double(m)), rb = rgamma(b - double(m));
  if (ra != 0.0 && rb != 0.0) {
    double psi1 = -std::numbers::egamma;
    double psim = -std::numbers::egamma;
    for (int j = 1; j <= m; ++j) psim += 1.0 / j;
    cplx psia = digamma(a);
    cplx psib = digamma(b);

    double mfact = 1.0;
    for (int j = 2; j <= m; ++j) mfact *= j;
    cplx c2 = 1.0 / mfact;
    cplx sum = 0.0;
    int small_run = 0;
    for (std::size_t n = 0;; ++n) {
      if (n >= cfg.max_terms)
        throw ConvergenceError("hyp2f1: (mBEA) series term cap exceeded");
      const cplx hbar = cplx(psi1 + psim, 0.0) - psia - psib;
      const cplx term = c2 * (hbar - lw);
      sum += term;
      if (std::abs(term) < cfg.near_one_tol * std::abs(sum)) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
      c2 *= (a + double(n)) * (b + double(n)) /
            (double(n + m + 1) * double(n + 1)) * w;
      psi1 += 1.0 / double(n + 1);
      psim += 1.0 / double(n + m + 1);
      psia += 1.0 / (a + double(n));
      psib += 1.0 / (b + double(n));
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    log_part = sign * ra * rb * sum;
  }
  return gamma(p.c) * (principal + log_part);
}

// Gauss value at z = 1 (w = 0); needs Re(c-a-b) > 0.
cplx hyp2f1_at_one(const Hyp2F1Params& p) {
  const cplx s = p.c - p.a - p.b;
  if (s.real() <= 0.0)
    throw DomainError("hyp2f1 divergent at z=1 for Re(c-a-b) <= 0");
  return gamma(p.c) * gamma(s) * rgamma(p.c - p.a) * rgamma(p.c - p.b);
}

}  // namespace

Hyp2F1Class Hyp2F1Params::classify(double int_tol, int* offset) const {
  long long m = 0;
  if (!near_int(c - a - b, int_tol, &m)) {
    if (offset) *offset = 0;
    return Hyp2F1Class::GENERIC;
  }
  if (offset) *offset = static_cast<int>(m >= 0 ? m : -m);
  return m >= 0 ? Hyp2F1Class::C_EQ_AB_PLUS_M : Hyp2F1Class::C_EQ_AB_MINUS_M;
}

cplx gamma(cplx z) {
  if (gamma_pole(z))
    throw DomainError("gamma pole at nonpositive integer");
  if (z.real() >= 0.5) return gamma_positive_half(z);
  // reflection: gamma(z) gamma(1-z) = pi / sin(pi z)
  return kPi / (std::sin(kPi * z) * gamma_positive_half(1.0 - z));
}

cplx rgamma(cplx z) {
  if (gamma_pole(z)) return 0.0;
  return 1.0 / gamma(z);
}

cplx digamma(cplx z) {
  if (gamma_pole(z))
    throw DomainError("digamma pole at nonpositive integer");
  cplx acc = 0.0, w = z;
  while (w.real() < 10.0) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  const cplx u = 1.0 / (w * w);
  cplx tail = 0.0;
  for (int k = 6; k >= 0; --k) tail = (tail + kPsiTail[k]) * u;
  return acc + std::log(w) - 0.5 / w - tail;
}

cplx hyp2f1_series(const Hyp2F1Params& p, cplx z, const Hyp2F1Config& cfg) {
  long long n = 0;
  if (near_nonpositive_int(p.a, cfg.int_tol, &n))
    return hyp2f1_terminating(p, z, n, true, cfg);
  if (near_nonpositive_int(p.b, cfg.int_tol, &n))
    return hyp2f1_terminating(p, z, n, false, cfg);
  if (near_nonpositive_int(p.c, cfg.int_tol))
    throw DomainError("hyp2f1 undefined: c is a nonpositive integer");
  if (std::abs(z) > cfg.series_radius)
    throw DomainError("hyp2f1_series outside its radius, " + param_str(p, z));
  return gauss_series(p.a, p.b, p.c, z, cfg.series_tol, cfg.max_terms, "direct series");
}

cplx hyp2f1_near_one_w(const Hyp2F1Params& p, cplx w, const Hyp2F1Config& cfg) {
  if (near_nonpositive_int(p.c, cfg.int_tol))
    throw DomainError("hyp2f1 undefined: c is a nonpositive integer");
  if (w.imag() == 0.0 && w.real() < 0.0)
    throw DomainError("hyp2f1_near_one: 1-z on the negative real axis");
  if (std::abs(w) > 0.6 + 1e-12)
    throw DomainError("hyp2f1_near_one requires |1-z| <= 0.6");
  if (w == 0.0) return hyp2f1_at_one(p);
  int m = 0;
  switch (p.classify(cfg.int_tol, &m)) {
    case Hyp2F1Class::GENERIC:
      return near_one_generic(p, w, cfg);
    case Hyp2F1Class::C_EQ_AB_PLUS_M:
      return near_one_log_plus(p, w, m, cfg);
    case Hyp2F1Class::C_EQ_AB_MINUS_M:
      return near_one_log_minus(p, w, m, cfg);
  }
  throw DomainError("hyp2f1_near_one: unreachable");
}

cplx hyp2f1_near_one(const Hyp2F1Params& p, cplx z, const Hyp2F1Config& cfg) {
  return hyp2f1_near_one_w(p, 1.0 - z, cfg);
}

cplx hyp2f1_w(const Hyp2F1Params& p, cplx z, cplx w, const Hyp2F1Config& cfg) {
  long long n = 0;
  if (near_nonpositive_int(p.a, cfg.int_tol, &n))
    return hyp2f1_terminating(p, z, n, true, cfg);
  if (near_nonpositive_int(p.b, cfg.int_tol, &n))
    return hyp2f1_terminating(p, z, n, false, cfg);
  if (w == 0.0) return hyp2f1_at_one(p);
  if (std::abs(z) <= 0.5) return hyp2f1_series(p, z, cfg);
  if (std::abs(w) <= 0.6) return hyp2f1_near_one_w(p, w, cfg);
  if (std::abs(z) <= cfg.series_radius) return hyp2f1_series(p, z, cfg);
  throw DomainError("hyp2f1: argument outside supported region, " + param_str(p, z));
}

cplx hyp2f1(const Hyp2F1Params& p, cplx z, const Hyp2F1Config& cfg) {
  return hyp2f1_w(p, z, 1.0 - z, cfg);
}

}  // namespace dsh::specfun
