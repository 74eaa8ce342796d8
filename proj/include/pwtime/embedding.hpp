#pragma once

#include "pwtime/evolution.hpp"

namespace pwtime {

inline constexpr int kMaxCompositeDim = 4096;

/// N clock ticks sampling [0, T] at midpoints t_k = (k + 1/2) T / N.
struct DiscreteClock {
  int ticks = 1;
  double T = 1.0;

  DiscreteClock(int ticks_, double T_) : ticks(ticks_), T(T_) {
    if (ticks < 1) throw std::invalid_argument("DiscreteClock: ticks >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("DiscreteClock: T > 0");
  }

  double tick_time(int k) const { return (k + 0.5) * T / ticks; }
};

/// Mixture definition for the explicit composite state: weights p_j over
/// initial pure system states, plus the spectrum and clock that generate the
/// histories.
struct CompositeScenario {
  std::vector<double> weights;
  std::vector<PureState> initial_states;
  EnergySpectrum spec;
  DiscreteClock clock;

  CompositeScenario(std::vector<double> weights_,
                    std::vector<PureState> initial_states_,
                    EnergySpectrum spec_, DiscreteClock clock_);
};

/// Discrete history |Psi> = (1/sqrt N) sum_k (U(t_k)|phi0>) (x) |k>,
/// system-major flat index n*N + k.
PureState build_history_vector(const PureState& phi0,
                               const EnergySpectrum& spec,
                               const DiscreteClock& clock);

/// rho = sum_j p_j |Psi_j><Psi_j| on the d*N-dimensional composite space.
/// Throws DimensionError when d*N exceeds max_dim.
DensityMatrix build_universe_density(const CompositeScenario& scenario,
                                     int max_dim = kMaxCompositeDim);

/// State of the system conditioned on clock tick k:
/// Tr_C(|k><k| rho_U) / Tr(|k><k| rho_U).
DensityMatrix relative_state_at_tick(const DensityMatrix& rho_u, int k, int d,
                                     int n_ticks);

/// Partial trace over the clock; equals (1/N) sum_k sigma_{R,t_k}.
DensityMatrix discrete_reduced_state(const DensityMatrix& rho_u, int d,
                                     int n_ticks);

/// S_L[Tr_C rho_U] - S_L[rho_U], the indicator computed from raw composite
/// data; converges to the analytic delta_s at O(N^-2).
double discrete_delta_s(const DensityMatrix& rho_u, int d, int n_ticks);

}  // namespace pwtime
