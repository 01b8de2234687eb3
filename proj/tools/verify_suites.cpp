#include "verify_suites.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "dsh/errors.hpp"
#include "dsh/huygens.hpp"
#include "dsh/kernels.hpp"
#include "dsh/report.hpp"
#include "dsh/solver.hpp"
#include "dsh/specfun.hpp"

namespace dsh::tools {

namespace {

using specfun::hyp2f1;
using specfun::hyp2f1_near_one;
using specfun::hyp2f1_series;
using specfun::Hyp2F1Params;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

CheckResult bounded(std::string name, double worst, double bound) {
  return {std::move(name), worst < bound,
          "max dev " + fmt(worst) + " (bound " + fmt(bound) + ")"};
}

std::vector<CheckResult> suite_specfun() {
  std::vector<CheckResult> out;

  {
    std::mt19937 rng(9000);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    int done = 0;
    while (done < 100) {
      const cplx a{2.0 * u(rng), 2.0 * u(rng)};
      const cplx b{2.0 * u(rng), 2.0 * u(rng)};
      const cplx c{1.5 + u(rng), u(rng)};
      const cplx s = c - a - b;
      if (std::abs(s.real() - std::round(s.real())) < 1e-6 &&
          std::abs(s.imag()) < 1e-6)
        continue;
      if (near_nonpositive_int(a, 1e-6) || near_nonpositive_int(b, 1e-6))
        continue;
      const double z = 0.4 + 0.2 * (0.5 * (u(rng) + 1.0));
      const Hyp2F1Params p{a, b, c};
      const cplx via_series = hyp2f1_series(p, z);
      const cplx via_conn = hyp2f1_near_one(p, z);
      worst = std::max(worst, std::abs(via_series - via_conn) /
                                  std::abs(via_series));
      ++done;
    }
    out.push_back(bounded("specfun/overlap-consistency", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (int n = -1; n >= -6; --n) {
      const double f1 = hyp2f1({double(n), double(n), 1.0}, 1.0).real();
      const double lhs =
          2.0 * n * hyp2f1({double(n + 1), double(n + 1), 2.0}, 1.0).real() + f1;
      worst = std::max(worst, std::abs(lhs) / std::abs(f1));
    }
    out.push_back(bounded("specfun/terminating-identity", worst, 1e-12));
  }

  {
    const double got = hyp2f1({0.5, 0.5, 2.0}, 1.0).real();
    const double dev = std::abs(got - 4.0 / std::numbers::pi);
    out.push_back(bounded("specfun/value-at-one-4-over-pi", dev, 1e-12));
  }

  {
    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      cplx z{8.0 * u(rng), 8.0 * u(rng)};
      if (std::abs(z.imag()) < 0.05) z += cplx(0, 0.1);
      worst = std::max(worst,
                       std::abs(specfun::gamma(z) * specfun::gamma(1.0 - z) *
                                    std::sin(std::numbers::pi * z) /
                                    std::numbers::pi -
                                1.0));
    }
    out.push_back(bounded("specfun/gamma-reflection", worst, 1e-11));
  }

  {
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n) {
      const double limit = specfun::gamma(double(2 * n - 1)).real() /
                           std::pow(specfun::gamma(double(n)).real(), 2);
      auto L = [&](double x) {
        return std::pow(x, 2 * n - 1) *
               hyp2f1({double(n), double(n), 1.0}, 1.0 - x).real();
      };
      const double extrap = (10.0 * L(1e-4) - L(1e-3)) / 9.0;
      worst = std::max(worst, std::abs(extrap - limit) / limit);
    }
    out.push_back(bounded("specfun/limit-x^(2n-1)F(n,n;1;1-x)", worst, 1e-6));
  }

  return out;
}

std::vector<CheckResult> suite_kernels() {
  std::vector<CheckResult> out;
  const CosmologyParams cp{1.0, 0.0};

  {
    double worst = 0.0, worst_sym = 0.0;
    for (int i = 0; i <= 19; ++i) {
      for (int j = 0; j <= 19; ++j) {
        const double r = 0.45 * i / 19.0, t = 0.05 + 2.5 * j / 19.0;
        const double closed_half = 0.5 * std::exp(0.5 * t);
        const double closed_32 =
            0.25 * std::exp(-0.5 * t) * ((1.0 - r * r) * std::exp(2.0 * t) + 1.0);
        const cplx k_half = kernels::kernel_K1(r, t, cplx(0.5, 0), cp);
        const cplx k_mhalf = kernels::kernel_K1(r, t, cplx(-0.5, 0), cp);
        const cplx k_32 = kernels::kernel_K1(r, t, cplx(1.5, 0), cp);
        worst = std::max({worst, std::abs(k_half - closed_half),
                          std::abs(k_mhalf - closed_half),
                          std::abs(k_32 - closed_32) / closed_32});
        worst_sym = std::max(worst_sym, std::abs(k_half - k_mhalf));
      }
    }
    out.push_back(bounded("kernels/K1-closed-forms", worst, 1e-11));
    out.push_back(bounded("kernels/K1-sign-symmetry", worst_sym, 1e-11));
  }

  {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx M{1.5 * u(rng), 1.5 * u(rng)};
      const double t = 1.5 * (u(rng) + 1.0) + 0.05;
      worst = std::max(worst, std::abs(kernels::kernel_E(0.0, t, t, M, cp) -
                                       0.5 * std::exp(t)) /
                                  (0.5 * std::exp(t)));
    }
    out.push_back(bounded("kernels/E-collapse", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (const cplx m : {cplx{0.3, 0.0}, cplx{1.0, 0.5}, cplx{0.0, -0.7}}) {
      const CosmologyParams cm{1.0, m};
      const cplx im = cplx(0, 1) * m;
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          const double r = 0.45 * i / 4.0, t = 0.2 + 2.3 * j / 4.0;
          const auto k1 = [&](double tt) {
            return kernels::kernel_K1(r, tt, cm.M_plus(), cm);
          };
          const double h = 1e-4;
          const cplx d1 = (k1(t + h) - k1(t - h)) / (2.0 * h);
          const cplx d2 = (k1(t + 0.5 * h) - k1(t - 0.5 * h)) / h;
          const cplx fd = (4.0 * d2 - d1) / 3.0 - (0.5 + im) * k1(t);
          const cplx closed = kernels::dirac_combo_plus(r, t, cm);
          worst = std::max(worst, std::abs(closed - fd) / std::abs(closed));
        }
      }
    }
    out.push_back(bounded("kernels/lemma-combination-fd", worst, 1e-6));
  }

  {
    // K0 at M = H/2 has the exact value -(H/4) e^{Ht/2}
    double worst = 0.0;
    for (double r : {0.0, 0.2}) {
      for (double t : {0.3, 1.1}) {
        const cplx got = kernels::kernel_K0(r, t, cplx(0.5, 0), cp);
        const double want = -0.25 * std::exp(0.5 * t);
        worst = std::max(worst, std::abs(got - want) / std::abs(want));
      }
    }
    out.push_back(bounded("kernels/K0-closed-value", worst, 1e-8));
  }

  return out;
}

std::vector<CheckResult> suite_asymptotics() {
  std::vector<CheckResult> out;

  {
    double worst = 0.0;
    const int ells[] = {-5, -7, 3, 5, 2, 4, -4, -6, -2, 0};
    for (int ell : ells) {
      const CosmologyParams cp{1.0, cplx(0, 0.5 * (1 + ell))};
      const MassClass cls = huygens::classify_mass(cp);
      for (double r : {0.0, 0.15, 0.3}) {
        const double numeric = kernels::script_F(std::exp(-12.0), r, ell);
        const cplx lead = kernels::tail_asymptote(cls, cp, r, 12.0);
        worst = std::max(worst, std::abs(numeric / lead.real() - 1.0));
      }
    }
    out.push_back(bounded("asymptotics/lattice-bracket-convergence", worst, 0.02));
  }

  {
    double worst = 0.0;
    for (const cplx m : {cplx{0.5, 0.0}, cplx{0.0, 0.25}, cplx{0.3, 0.3}}) {
      const CosmologyParams cp{1.0, m};
      const cplx imH = cplx(0, 1) * m;
      for (double r : {0.0, 0.15, 0.3}) {
        const auto lc = LightconeCoords::from_rt(r, 12.0, 1.0);
        const cplx F2 = specfun::hyp2f1_w({1.0 - imH, 1.0 - imH, 2.0}, lc.z,
                                          lc.one_minus_z);
        const cplx F1 = specfun::hyp2f1_w({-imH, -imH, 1.0}, lc.z, lc.one_minus_z);
        const cplx numeric =
            2.0 * imH * (1.0 - lc.tau * lc.tau - lc.A * lc.A) * F2 -
            (1.0 + lc.tau) * lc.denom * F1;
        const cplx lead = kernels::tail_asymptote(MassClass{}, cp, r, 12.0);
        worst = std::max(worst, std::abs(numeric / lead - 1.0));
      }
    }
    out.push_back(bounded("asymptotics/generic-bracket-convergence", worst, 0.02));
  }

  {
    const RadialBump bump{0.1, 1.0};
    double least = 1e300;
    for (const cplx m : {cplx{0, 0.25}, cplx{0.5, 0}, cplx{0, -0.5}, cplx{0, 2}}) {
      const CosmologyParams cp{1.0, m};
      least = std::min(least, huygens::nondegeneracy_check(
                                  bump, huygens::classify_mass(cp), cp));
    }
    out.push_back({"asymptotics/bump-nondegeneracy", least > 0.0,
                   "least witness " + fmt(least)});
  }

  return out;
}

std::vector<CheckResult> suite_theorem(unsigned n_threads) {
  // the 10-mass x 2-split verdict grid; expectation per the acceptance table:
  // HUYGENSIAN exactly at (0, either), (iH, FIRST), (-iH, SECOND)
  std::vector<CheckResult> out;
  const RadialBump bump{0.1, 1.0};
  std::vector<double> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(3.0 + 9.0 * i / 19.0);

  const cplx masses[] = {{0, 0},    {0, 1},   {0, -1},   {0, 0.5}, {0, -0.5},
                         {0, 2},    {0, -2},  {0.5, 0},  {0, 0.3}, {1, 1}};
  for (const cplx m : masses) {
    for (const auto split : {huygens::Split::FIRST, huygens::Split::SECOND}) {
      const bool expect_huygens =
          (m == cplx{0, 0}) || (m == cplx{0, 1} && split == huygens::Split::FIRST) ||
          (m == cplx{0, -1} && split == huygens::Split::SECOND);
      const auto rep =
          huygens::tail_scan(split, bump, {1.0, m}, grid, {}, n_threads);
      const bool huygens_measured = rep.verdict == huygens::Verdict::HUYGENSIAN;
      CheckResult res;
      res.name = "theorem/m=" + format_complex(m) +
                 (split == huygens::Split::FIRST ? "/first" : "/second");
      res.pass = huygens_measured == expect_huygens &&
                 (expect_huygens ? rep.max_tail() < 1e-8
                                 : rep.verdict ==
                                       huygens::Verdict::NON_HUYGENSIAN_MATCHED);
      res.detail = "verdict " + verdict_name(rep.verdict) + ", max tail " +
                   fmt(rep.max_tail());
      out.push_back(res);
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, unsigned n_threads) {
  if (suite == "specfun") return suite_specfun();
  if (suite == "kernels") return suite_kernels();
  if (suite == "asymptotics") return suite_asymptotics();
  if (suite == "theorem") return suite_theorem(n_threads);
  throw DomainError("unknown verify suite: " + suite);
}

}  // namespace dsh::tools
