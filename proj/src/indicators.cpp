#include "pwtime/indicators.hpp"

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

double delta_s(const DensityMatrix& sigma0, const EnergySpectrum& spec,
               const EvolutionWindow& w) {
  check_same_dim(sigma0, spec, "delta_s");
  double acc = 0.0;
  for (int n = 0; n < sigma0.dim(); ++n)
    for (int m = 0; m < sigma0.dim(); ++m) {
      const double gap = spec.gap(n, m);
      if (gap == 0.0) continue;
      const double theta = gap * w.T / (2.0 * w.hbar);
      const double k = sinc(theta);
      acc += std::norm(sigma0(n, m)) * (1.0 - k * k);
    }
  return acc;
}

double delta_s_max(const DensityMatrix& sigma0, const EnergySpectrum& spec) {
  check_same_dim(sigma0, spec, "delta_s_max");
  double acc = 0.0;
  for (int n = 0; n < sigma0.dim(); ++n)
    for (int m = 0; m < sigma0.dim(); ++m)
      if (spec.gap(n, m) != 0.0) acc += std::norm(sigma0(n, m));
  return acc;
}

double short_time_delta_s(const DensityMatrix& sigma0,
                          const EnergySpectrum& spec,
                          const EvolutionWindow& w) {
  check_same_dim(sigma0, spec, "short_time_delta_s");
  return w.T * w.T / (12.0 * w.hbar * w.hbar) *
         quantum_dispersion(sigma0, spec);
}

bool witness(double delta_s_value, double witness_tol) {
  return delta_s_value > witness_tol;
}

DensityMatrix white_noise_state(const PureState& psi, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("white_noise_state: alpha must be in [0, 1]");
  const int d = psi.dim();
  ComplexMatrix out = alpha * (psi.amplitudes() * psi.amplitudes().adjoint());
  out += (1.0 - alpha) / d * ComplexMatrix::Identity(d, d);
  return DensityMatrix::unchecked(std::move(out), psi.norm_tol());
}

WhiteNoisePredictions white_noise_predictions(const PureState& psi,
                                              double alpha,
                                              const EnergySpectrum& spec) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument(
        "white_noise_predictions: alpha must be in [0, 1]");
  if (psi.dim() != spec.dim())
    throw DimensionError(
        "white_noise_predictions: state and spectrum dimensions differ");

  const DensityMatrix pure = pure_density(psi);
  const EnergyDistribution dist = energy_distribution(pure, spec);
  WhiteNoisePredictions pred;
  pred.delta_s_max = alpha * alpha * linear_entropy(dist);
  pred.quantum_dispersion =
      2.0 * alpha * alpha * energy_dispersion(pure, spec);
  return pred;
}

IndicatorReport indicator_report(const DensityMatrix& sigma0,
                                 const EnergySpectrum& spec,
                                 const EvolutionWindow& w,
                                 double witness_tol) {
  IndicatorReport report;
  report.delta_s = delta_s(sigma0, spec, w);
  report.delta_s_max = delta_s_max(sigma0, spec);
  report.short_time_estimate = short_time_delta_s(sigma0, spec, w);
  report.s_global = linear_entropy(sigma0);
  report.s_reduced = linear_entropy(time_average(sigma0, spec, w));
  report.path_discrepancy =
      std::abs(report.delta_s - (report.s_reduced - report.s_global));
  report.witness_tol = witness_tol;
  report.entangled_witness = witness(report.delta_s, witness_tol);
  return report;
}

}  // namespace pwtime
