#pragma once

#include <cmath>
#include <complex>
#include <string>

namespace dsh {

using cplx = std::complex<double>;

/// w^e on the principal branch for a strictly positive real base.
inline cplx pow_pos(double base, cplx e) {
  return std::exp(e * std::log(base));
}

/// Integer power of a complex number by repeated multiplication.
inline cplx powi(cplx w, int n) {
  if (n < 0) return 1.0 / powi(w, -n);
  cplx acc = 1.0;
  while (n > 0) {
    if (n & 1) acc *= w;
    w *= w;
    n >>= 1;
  }
  return acc;
}

/// True when z lies within tol of the integer *out.
inline bool near_int(cplx z, double tol, long long* out = nullptr) {
  const double re = std::round(z.real());
  if (std::abs(z.real() - re) > tol || std::abs(z.imag()) > tol) return false;
  if (out) *out = static_cast<long long>(re);
  return true;
}

inline bool near_nonpositive_int(cplx z, double tol, long long* out = nullptr) {
  long long n = 0;
  if (!near_int(z, tol, &n) || n > 0) return false;
  if (out) *out = n;
  return true;
}

/// Formats a complex number as "a+bi" / "a-bi", 17 significant digits.
std::string format_complex(cplx z);

/// Parses "a+bi" strings; accepts pure reals ("1.5"), pure imaginaries
/// ("0.25i", "i", "-i") and full forms ("1e-2-0.3i"). Throws DomainError on
/// malformed input.
cplx parse_complex(const std::string& s);

}  // namespace dsh
