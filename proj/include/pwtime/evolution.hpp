#pragma once

#include <optional>

#include "pwtime/spectra.hpp"

namespace pwtime {

/// Finite interval [0, T] the composite state is defined on. The window's
/// hbar drives every T-dependent kernel phase theta_nm = (E_n - E_m) T / 2hbar.
struct EvolutionWindow {
  double T = 0.0;
  double hbar = 1.0;

  EvolutionWindow(double T_, double hbar_ = 1.0) : T(T_), hbar(hbar_) {
    if (!(T >= 0.0) || !(hbar > 0.0))
      throw std::invalid_argument("EvolutionWindow: requires T >= 0, hbar > 0");
  }
};

/// sin(x)/x with a series branch below |x| = 1e-4 so the x -> 0 limit is
/// exact to machine precision.
double sinc(double x);

/// Dimensionless phase x = eps*T/2hbar when the spectrum has exactly two
/// level groups (eps = gap between them); nullopt otherwise.
std::optional<double> dimensionless_phase(const EnergySpectrum& spec,
                                          const EvolutionWindow& w);

/// Conditional state at clock value t: sigma_nm(t) = e^{-i(E_n-E_m)t/hbar}
/// sigma_nm(0). Entrywise phases, never matrix exponentials; degenerate pairs
/// pick up no phase at all.
DensityMatrix evolve(const DensityMatrix& sigma0, const EnergySpectrum& spec,
                     double t);

/// Time-averaged (reduced) state over [0, T]:
/// <n|rho_R|m> = sigma_nm(0) e^{-i(E_n-E_m)T/2hbar} sinc((E_n-E_m)T/2hbar),
/// with degenerate pairs using kernel value exactly 1.
DensityMatrix time_average(const DensityMatrix& sigma0,
                           const EnergySpectrum& spec,
                           const EvolutionWindow& w);

/// (1/i hbar)[H, sigma]; Hermitian and traceless.
ComplexMatrix von_neumann_rhs(const DensityMatrix& sigma,
                              const EnergySpectrum& spec);

/// Frobenius norm of the central-difference derivative of evolve minus
/// von_neumann_rhs at time t; decays as O(dt^2).
double von_neumann_residual(const DensityMatrix& sigma0,
                            const EnergySpectrum& spec, double t, double dt);

}  // namespace pwtime
