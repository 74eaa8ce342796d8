#include "pwtime/embedding.hpp"

#include <cmath>
#include <sstream>

namespace pwtime {

CompositeScenario::CompositeScenario(std::vector<double> weights_,
                                     std::vector<PureState> initial_states_,
                                     EnergySpectrum spec_, DiscreteClock clock_)
    : weights(std::move(weights_)),
      initial_states(std::move(initial_states_)),
      spec(std::move(spec_)),
      clock(clock_) {
  if (weights.empty() || weights.size() != initial_states.size())
    throw WeightError(
        "CompositeScenario: weights and initial states must pair up");
  double sum = 0.0;
  for (double w : weights) {
    if (w < -kDefaultValidationTol)
      throw WeightError("CompositeScenario: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kDefaultValidationTol)
    throw WeightError("CompositeScenario: weights do not sum to 1");
  for (const PureState& phi : initial_states)
    if (phi.dim() != spec.dim())
      throw DimensionError(
          "CompositeScenario: state dimension does not match spectrum");
}

PureState build_history_vector(const PureState& phi0,
                               const EnergySpectrum& spec,
                               const DiscreteClock& clock) {
  if (phi0.dim() != spec.dim())
    throw DimensionError(
        "build_history_vector: state dimension does not match spectrum");
  const int d = phi0.dim();
  const int n_ticks = clock.ticks;
  const double root_n = std::sqrt(static_cast<double>(n_ticks));

  ComplexVector amp(d * n_ticks);
  for (int n = 0; n < d; ++n) {
    const double energy = spec.effective_level(n);
    for (int k = 0; k < n_ticks; ++k) {
      const double phase = -energy * clock.tick_time(k) / spec.hbar();
      amp(n * n_ticks + k) = phi0[n] * std::polar(1.0 / root_n, phase);
    }
  }
  return PureState(std::move(amp), phi0.norm_tol());
}

DensityMatrix build_universe_density(const CompositeScenario& scenario,
                                     int max_dim) {
  const int d = scenario.spec.dim();
  const int n_ticks = scenario.clock.ticks;
  if (d * n_ticks > max_dim) {
    std::ostringstream msg;
    msg << "build_universe_density: composite dimension " << d << "*"
        << n_ticks << " = " << d * n_ticks << " exceeds the cap " << max_dim;
    throw DimensionError(msg.str());
  }

  ComplexMatrix rho = ComplexMatrix::Zero(d * n_ticks, d * n_ticks);
  for (size_t j = 0; j < scenario.weights.size(); ++j) {
    const PureState history = build_history_vector(
        scenario.initial_states[j], scenario.spec, scenario.clock);
    rho += scenario.weights[j] *
           (history.amplitudes() * history.amplitudes().adjoint());
  }
  return DensityMatrix::unchecked(std::move(rho), kDefaultValidationTol);
}

DensityMatrix relative_state_at_tick(const DensityMatrix& rho_u, int k, int d,
                                     int n_ticks) {
  if (d < 1 || n_ticks < 1 || rho_u.dim() != d * n_ticks)
    throw DimensionError(
        "relative_state_at_tick: composite dim != d * n_ticks");
  if (k < 0 || k >= n_ticks)
    throw DimensionError("relative_state_at_tick: tick index out of range");

  ComplexMatrix block(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      block(n, m) = rho_u(n * n_ticks + k, m * n_ticks + k);

  const double p = block.trace().real();
  if (p <= rho_u.validation_tol()) {
    std::ostringstream msg;
    msg << "relative_state_at_tick: tick " << k
        << " has conditional probability " << p;
    throw ZeroProbabilityError(msg.str());
  }
  return DensityMatrix::unchecked(block / p, rho_u.validation_tol());
}

DensityMatrix discrete_reduced_state(const DensityMatrix& rho_u, int d,
                                     int n_ticks) {
  return partial_trace_over_clock(rho_u, d, n_ticks);
}

double discrete_delta_s(const DensityMatrix& rho_u, int d, int n_ticks) {
  return linear_entropy(discrete_reduced_state(rho_u, d, n_ticks)) -
         linear_entropy(rho_u);
}

}  // namespace pwtime
