#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pwtime/embedding.hpp"
#include "pwtime/indicators.hpp"

namespace pwtime {

enum class StateKind { Matrix, Pure, WhiteNoise };

/// Declarative scenario: system spectrum, one state specification, a window
/// grid (in T or in x), and optional embedding settings. Produced by
/// parse_config / load_config, which validate everything up front.
struct ScenarioConfig {
  RealVector levels;
  double hbar = 1.0;
  double group_tol = kDefaultGroupTol;

  StateKind state_kind = StateKind::Matrix;
  std::optional<DensityMatrix> state;
  std::optional<PureState> seed;  // set for Pure and WhiteNoise states
  double alpha = 1.0;             // WhiteNoise only

  bool sweep_in_x = false;        // window given as x rather than T
  std::vector<double> window_values;

  bool embedding_enabled = false;
  std::vector<int> embedding_ticks;

  std::string output_path;

  EnergySpectrum spectrum() const {
    return EnergySpectrum(levels, hbar, group_tol);
  }
};

ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::string& path);

/// One grid point of a sweep. x is present when the spectrum has a
/// well-defined two-group gap; discrete columns are present when the
/// embedding is enabled and T > 0.
struct SweepRow {
  std::optional<double> x;
  double T = 0.0;
  double s_global = 0.0;
  double s_reduced = 0.0;
  double delta_s = 0.0;
  double delta_s_max = 0.0;
  double short_time_estimate = 0.0;
  bool witness = false;
  std::optional<double> discrete_delta_s;
  std::optional<int> ticks;
};

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg,
                                int max_dim = kMaxCompositeDim);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

struct Fig1LeftRow {
  double sigma01, s_reduced, s_global;
};
struct Fig1RightRow {
  double x, delta_s_025, delta_s_035;
};

/// S_L curves over sigma01 in [0, 0.4] (201 points) at sigma00 = 0.2, x = 1.2.
std::vector<Fig1LeftRow> fig1_left_rows();
/// Delta S over x in [0, 10] (501 points) for sigma01 = 0.25 and 0.35.
std::vector<Fig1RightRow> fig1_right_rows();

/// panel is "left" or "right".
void write_fig1_csv(const std::string& panel, std::ostream& out);

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;   // max residual, or the measured ratio
  double threshold = 0.0;  // tolerance, or the ratio band edge
  std::string note;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Runs the identity suites on the configured scenario plus seeded random
/// batches: two-path Delta S, dephasing identity, entropy decomposition,
/// short-time ratio, white-noise laws, von Neumann residual order, and the
/// embedding oracle when enabled.
VerifyReport run_verify(const ScenarioConfig& cfg, std::uint64_t seed = 12345,
                        int max_dim = kMaxCompositeDim);
void write_verify_report(const VerifyReport& report, std::ostream& out);

/// Spectral decomposition of sigma0 into an orthogonal-seed mixture scenario
/// (eigenvalues below weight_cutoff are dropped, weights renormalized).
CompositeScenario scenario_from_state(const DensityMatrix& sigma0,
                                      const EnergySpectrum& spec,
                                      const DiscreteClock& clock,
                                      double weight_cutoff = 1e-12);

}  // namespace pwtime
