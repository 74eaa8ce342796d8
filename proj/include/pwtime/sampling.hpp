#pragma once

#include <random>

#include "pwtime/spectra.hpp"

namespace pwtime {

using Rng = std::mt19937_64;

/// Haar-distributed state vector (normalized complex Gaussian).
PureState random_pure_state(int dim, Rng& rng);

/// Ginibre construction G G^dagger / Tr, full rank almost surely.
DensityMatrix random_density(int dim, Rng& rng);

/// Random spectrum on [0, ~d]: distinct groups separated by gaps >= 0.25,
/// degeneracies (exact duplicates) drawn at random when allowed.
EnergySpectrum random_spectrum(int dim, Rng& rng, bool allow_degeneracy = true,
                               double hbar = 1.0);

}  // namespace pwtime
