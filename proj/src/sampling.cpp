#include "pwtime/sampling.hpp"

#include <algorithm>

namespace pwtime {

PureState random_pure_state(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector amp(dim);
  for (int n = 0; n < dim; ++n) amp(n) = Complex(gauss(rng), gauss(rng));
  amp /= amp.norm();
  return PureState(std::move(amp));
}

DensityMatrix random_density(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::unchecked(std::move(rho));
}

EnergySpectrum random_spectrum(int dim, Rng& rng, bool allow_degeneracy,
                               double hbar) {
  std::uniform_int_distribution<int> group_count(1, dim);
  std::uniform_real_distribution<double> gap(0.25, 1.0);

  const int n_groups = allow_degeneracy ? group_count(rng) : dim;
  std::vector<double> group_energy(static_cast<size_t>(n_groups));
  double e = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  for (int g = 0; g < n_groups; ++g) {
    group_energy[static_cast<size_t>(g)] = e;
    e += gap(rng);
  }

  // Every group gets one member; the rest are assigned at random (exact
  // duplicates, so grouped and raw energies coincide bit-for-bit).
  std::vector<int> assignment(static_cast<size_t>(dim));
  for (int n = 0; n < n_groups; ++n) assignment[static_cast<size_t>(n)] = n;
  std::uniform_int_distribution<int> pick(0, n_groups - 1);
  for (int n = n_groups; n < dim; ++n)
    assignment[static_cast<size_t>(n)] = pick(rng);
  std::shuffle(assignment.begin(), assignment.end(), rng);

  RealVector levels(dim);
  for (int n = 0; n < dim; ++n)
    levels(n) = group_energy[static_cast<size_t>(assignment[static_cast<size_t>(n)])];
  return EnergySpectrum(std::move(levels), hbar);
}

}  // namespace pwtime
