#include "pwtime/evolution.hpp"

#include <cmath>

namespace pwtime {

namespace {

void check_same_dim(const DensityMatrix& sigma, const EnergySpectrum& spec,
                    const char* op) {
  if (sigma.dim() != spec.dim())
    throw DimensionError(std::string(op) +
                         ": state and spectrum dimensions differ");
}

}  // namespace

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

std::optional<double> dimensionless_phase(const EnergySpectrum& spec,
                                          const EvolutionWindow& w) {
  const LevelGroups& groups = spec.level_groups();
  if (groups.count() != 2) return std::nullopt;
  const double eps = groups.groups[1].energy - groups.groups[0].energy;
  return eps * w.T / (2.0 * w.hbar);
}

DensityMatrix evolve(const DensityMatrix& sigma0, const EnergySpectrum& spec,
                     double t) {
  check_same_dim(sigma0, spec, "evolve");
  const int d = sigma0.dim();
  ComplexMatrix out(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m) {
      const double gap = spec.gap(n, m);
      out(n, m) = gap == 0.0
                      ? sigma0(n, m)
                      : sigma0(n, m) * std::polar(1.0, -gap * t / spec.hbar());
    }
  return DensityMatrix::unchecked(std::move(out), sigma0.validation_tol());
}

DensityMatrix time_average(const DensityMatrix& sigma0,
                           const EnergySpectrum& spec,
                           const EvolutionWindow& w) {
  check_same_dim(sigma0, spec, "time_average");
  const int d = sigma0.dim();
  ComplexMatrix out(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m) {
      const double gap = spec.gap(n, m);
      if (gap == 0.0) {
        out(n, m) = sigma0(n, m);  // kernel exactly 1 on degenerate pairs
      } else {
        const double theta = gap * w.T / (2.0 * w.hbar);
        const Complex kernel = sinc(theta) *
                               Complex(std::cos(theta), -std::sin(theta));
        out(n, m) = sigma0(n, m) * kernel;
      }
    }
  return DensityMatrix::unchecked(std::move(out), sigma0.validation_tol());
}

ComplexMatrix von_neumann_rhs(const DensityMatrix& sigma,
                              const EnergySpectrum& spec) {
  check_same_dim(sigma, spec, "von_neumann_rhs");
  const int d = sigma.dim();
  ComplexMatrix out(d, d);
  // (1/i hbar)[H, sigma]: entry (n, m) is -i (E_n - E_m) sigma_nm / hbar.
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      out(n, m) = Complex(0.0, -spec.gap(n, m) / spec.hbar()) * sigma(n, m);
  return out;
}

double von_neumann_residual(const DensityMatrix& sigma0,
                            const EnergySpectrum& spec, double t, double dt) {
  if (!(dt > 0.0))
    throw std::invalid_argument("von_neumann_residual: dt must be > 0");
  check_same_dim(sigma0, spec, "von_neumann_residual");
  const ComplexMatrix forward = evolve(sigma0, spec, t + dt).matrix();
  const ComplexMatrix backward = evolve(sigma0, spec, t - dt).matrix();
  const ComplexMatrix rhs = von_neumann_rhs(evolve(sigma0, spec, t), spec);
  return ((forward - backward) / (2.0 * dt) - rhs).norm();
}

}  // namespace pwtime
