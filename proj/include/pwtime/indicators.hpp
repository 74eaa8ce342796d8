#pragma once

#include "pwtime/evolution.hpp"

namespace pwtime {

/// Entanglement indicator Delta S = S_L[rho_R] - S_L[rho], in its closed sum
/// form sum_{omega_nm != 0} |sigma_nm(0)|^2 (1 - sinc^2(omega_nm T/2)).
double delta_s(const DensityMatrix& sigma0, const EnergySpectrum& spec,
               const EvolutionWindow& w);

/// Supremum / T -> infinity limit: sum_{omega_nm != 0} |sigma_nm(0)|^2.
/// Equals the entropy gained under a non-selective energy measurement.
double delta_s_max(const DensityMatrix& sigma0, const EnergySpectrum& spec);

/// Lowest order in T: (T^2 / 12 hbar^2) * quantum_dispersion(sigma0).
double short_time_delta_s(const DensityMatrix& sigma0,
                          const EnergySpectrum& spec,
                          const EvolutionWindow& w);

/// Sufficient criterion: true => the global clock-system state is entangled.
/// false is inconclusive, never a separability claim.
bool witness(double delta_s_value, double witness_tol = kDefaultWitnessTol);

/// alpha |psi><psi| + (1-alpha)/d * I.
DensityMatrix white_noise_state(const PureState& psi, double alpha);

/// Closed-form predictions for the white-noise family:
/// delta_s_max = alpha^2 S_L[{p_E}],  D = 2 alpha^2 sigma_E^2(psi).
struct WhiteNoisePredictions {
  double delta_s_max = 0.0;
  double quantum_dispersion = 0.0;
};

WhiteNoisePredictions white_noise_predictions(const PureState& psi,
                                              double alpha,
                                              const EnergySpectrum& spec);

/// Indicator bundle with both computation paths (sum form vs entropy
/// difference) and their discrepancy.
struct IndicatorReport {
  double delta_s = 0.0;        // sum form
  double delta_s_max = 0.0;
  double short_time_estimate = 0.0;
  double s_global = 0.0;       // S_L[sigma0]
  double s_reduced = 0.0;      // S_L[time_average(sigma0)]
  double path_discrepancy = 0.0;  // |delta_s - (s_reduced - s_global)|
  bool entangled_witness = false;
  double witness_tol = kDefaultWitnessTol;
};

IndicatorReport indicator_report(const DensityMatrix& sigma0,
                                 const EnergySpectrum& spec,
                                 const EvolutionWindow& w,
                                 double witness_tol = kDefaultWitnessTol);

}  // namespace pwtime
