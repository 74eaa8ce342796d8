#include "pwtime/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pwtime/sampling.hpp"

namespace pwtime {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw ConfigError("expected a number or an [re, im] pair");
}

ComplexVector parse_amplitudes(const json& j) {
  if (!j.is_array() || j.empty())
    throw ConfigError("amplitudes must be a non-empty array");
  ComplexVector amp(static_cast<Eigen::Index>(j.size()));
  for (size_t n = 0; n < j.size(); ++n)
    amp(static_cast<Eigen::Index>(n)) = parse_complex(j[n]);
  return amp;
}

ComplexMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty())
    throw ConfigError("state.matrix must be a non-empty array of rows");
  const size_t rows = j.size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows),
                  static_cast<Eigen::Index>(rows));
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != rows)
      throw ConfigError("state.matrix must be square");
    for (size_t c = 0; c < rows; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_complex(j[r][c]);
  }
  return m;
}

std::vector<double> parse_range(const json& j, const char* name) {
  std::vector<double> values;
  if (j.is_number()) {
    values.push_back(j.get<double>());
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number()) throw ConfigError(std::string(name) + ": bad value");
      values.push_back(v.get<double>());
    }
  } else if (j.is_object()) {
    const double lo = j.at("min").get<double>();
    const double hi = j.at("max").get<double>();
    const int count = j.at("count").get<int>();
    if (count < 1) throw ConfigError(std::string(name) + ": count must be >= 1");
    if (hi < lo) throw ConfigError(std::string(name) + ": max < min");
    if (count == 1) {
      values.push_back(lo);
    } else {
      for (int i = 0; i < count; ++i)
        values.push_back(lo + (hi - lo) * i / (count - 1));
    }
  } else {
    throw ConfigError(std::string(name) +
                      ": expected number, array, or {min, max, count}");
  }
  if (values.empty()) throw ConfigError(std::string(name) + ": empty range");
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw ConfigError(std::string(name) + ": values must be finite and >= 0");
  std::sort(values.begin(), values.end());
  return values;
}

ScenarioConfig parse_config_impl(const json& root) {
  ScenarioConfig cfg;

  const json& system = root.at("system");
  const json& jlevels = system.at("levels");
  if (!jlevels.is_array() || jlevels.empty())
    throw ConfigError("system.levels must be a non-empty array");
  cfg.levels.resize(static_cast<Eigen::Index>(jlevels.size()));
  for (size_t n = 0; n < jlevels.size(); ++n)
    cfg.levels(static_cast<Eigen::Index>(n)) = jlevels[n].get<double>();
  cfg.hbar = system.value("hbar", 1.0);
  cfg.group_tol = system.value("group_tol", kDefaultGroupTol);
  if (!(cfg.hbar > 0.0)) throw ConfigError("system.hbar must be > 0");
  if (!(cfg.group_tol > 0.0)) throw ConfigError("system.group_tol must be > 0");
  const EnergySpectrum spec = cfg.spectrum();

  const json& state = root.at("state");
  const int given = static_cast<int>(state.contains("matrix")) +
                    static_cast<int>(state.contains("pure")) +
                    static_cast<int>(state.contains("white_noise"));
  if (given != 1)
    throw ConfigError(
        "state must contain exactly one of: matrix, pure, white_noise");

  if (state.contains("matrix")) {
    cfg.state_kind = StateKind::Matrix;
    cfg.state = DensityMatrix(parse_matrix(state.at("matrix")));
  } else if (state.contains("pure")) {
    cfg.state_kind = StateKind::Pure;
    cfg.seed = PureState(parse_amplitudes(state.at("pure")));
    cfg.state = pure_density(*cfg.seed);
  } else {
    cfg.state_kind = StateKind::WhiteNoise;
    const json& wn = state.at("white_noise");
    cfg.seed = PureState(parse_amplitudes(wn.at("amplitudes")));
    cfg.alpha = wn.at("alpha").get<double>();
    cfg.state = white_noise_state(*cfg.seed, cfg.alpha);
  }
  if (cfg.state->dim() != spec.dim())
    throw ConfigError("state dimension does not match system.levels");

  const json& window = root.at("window");
  const bool has_t = window.contains("T");
  const bool has_x = window.contains("x");
  if (has_t == has_x)
    throw ConfigError("window must contain exactly one of: T, x");
  cfg.sweep_in_x = has_x;
  cfg.window_values =
      parse_range(has_x ? window.at("x") : window.at("T"), "window");
  if (cfg.sweep_in_x && spec.level_groups().count() != 2)
    throw ConfigError(
        "window.x needs a spectrum with exactly two level groups");

  if (root.contains("embedding")) {
    const json& emb = root.at("embedding");
    cfg.embedding_enabled = emb.value("enable", false);
    if (emb.contains("N")) {
      for (const auto& v : emb.at("N")) {
        const int n = v.get<int>();
        if (n < 1) throw ConfigError("embedding.N entries must be >= 1");
        cfg.embedding_ticks.push_back(n);
      }
      std::sort(cfg.embedding_ticks.begin(), cfg.embedding_ticks.end());
      cfg.embedding_ticks.erase(
          std::unique(cfg.embedding_ticks.begin(), cfg.embedding_ticks.end()),
          cfg.embedding_ticks.end());
    }
    if (cfg.embedding_enabled && cfg.embedding_ticks.empty())
      throw ConfigError("embedding.enable requires a non-empty N list");
  }

  if (root.contains("output")) {
    const json& output = root.at("output");
    cfg.output_path = output.value("path", std::string());
    const std::string format = output.value("format", std::string("csv"));
    if (format != "csv") throw ConfigError("output.format must be \"csv\"");
  }
  return cfg;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    return parse_config_impl(root);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config schema error: ") + e.what());
  }
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

CompositeScenario scenario_from_state(const DensityMatrix& sigma0,
                                      const EnergySpectrum& spec,
                                      const DiscreteClock& clock,
                                      double weight_cutoff) {
  const EigenDecomposition eig = jacobi_diagonalize(sigma0.matrix());
  std::vector<double> weights;
  std::vector<PureState> seeds;
  double total = 0.0;
  for (int i = 0; i < sigma0.dim(); ++i) {
    const double w = eig.eigenvalues(i);
    if (w <= weight_cutoff) continue;
    weights.push_back(w);
    seeds.emplace_back(ComplexVector(eig.eigenvectors.col(i)));
    total += w;
  }
  if (weights.empty())
    throw ValidationError("scenario_from_state: state has no spectral weight");
  for (double& w : weights) w /= total;
  return CompositeScenario(std::move(weights), std::move(seeds), spec, clock);
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg, int max_dim) {
  const EnergySpectrum spec = cfg.spectrum();
  const DensityMatrix& sigma0 = *cfg.state;
  const LevelGroups& groups = spec.level_groups();
  const bool has_eps = groups.count() == 2;
  const double eps =
      has_eps ? groups.groups[1].energy - groups.groups[0].energy : 0.0;

  std::vector<SweepRow> rows;
  for (double value : cfg.window_values) {
    const double T = cfg.sweep_in_x ? 2.0 * cfg.hbar * value / eps : value;
    const EvolutionWindow w(T, cfg.hbar);
    const IndicatorReport rep = indicator_report(sigma0, spec, w);

    SweepRow base;
    if (cfg.sweep_in_x)
      base.x = value;
    else if (has_eps)
      base.x = eps * T / (2.0 * cfg.hbar);
    base.T = T;
    base.s_global = rep.s_global;
    base.s_reduced = rep.s_reduced;
    base.delta_s = rep.delta_s;
    base.delta_s_max = rep.delta_s_max;
    base.short_time_estimate = rep.short_time_estimate;
    base.witness = rep.entangled_witness;

    if (cfg.embedding_enabled && T > 0.0) {
      for (int n_ticks : cfg.embedding_ticks) {
        SweepRow row = base;
        const DiscreteClock clock(n_ticks, T);
        const CompositeScenario scenario =
            scenario_from_state(sigma0, spec, clock);
        const DensityMatrix rho_u = build_universe_density(scenario, max_dim);
        row.discrete_delta_s = discrete_delta_s(rho_u, spec.dim(), n_ticks);
        row.ticks = n_ticks;
        rows.push_back(std::move(row));
      }
    } else {
      rows.push_back(std::move(base));
    }
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "x,T,S_global,S_reduced,delta_S,delta_S_max,short_time_estimate,"
         "witness,discrete_delta_S,N\n";
  for (const SweepRow& row : rows) {
    if (row.x) out << fmt(*row.x);
    out << ',' << fmt(row.T) << ',' << fmt(row.s_global) << ','
        << fmt(row.s_reduced) << ',' << fmt(row.delta_s) << ','
        << fmt(row.delta_s_max) << ',' << fmt(row.short_time_estimate) << ','
        << (row.witness ? '1' : '0') << ',';
    if (row.discrete_delta_s) out << fmt(*row.discrete_delta_s);
    out << ',';
    if (row.ticks) out << *row.ticks;
    out << '\n';
  }
}

namespace {

// The Fig. 1 system: qubit with levels (0, 1), hbar = 1, sigma00 = 0.2.
DensityMatrix fig1_state(double sigma01) {
  ComplexMatrix m(2, 2);
  m << Complex(0.2, 0.0), Complex(sigma01, 0.0), Complex(sigma01, 0.0),
      Complex(0.8, 0.0);
  return DensityMatrix(std::move(m));
}

EnergySpectrum fig1_spectrum() {
  RealVector levels(2);
  levels << 0.0, 1.0;
  return EnergySpectrum(levels);
}

}  // namespace

std::vector<Fig1LeftRow> fig1_left_rows() {
  const EnergySpectrum spec = fig1_spectrum();
  const EvolutionWindow w(2.4);  // x = eps T / 2hbar = 1.2
  std::vector<Fig1LeftRow> rows;
  rows.reserve(201);
  for (int i = 0; i <= 200; ++i) {
    const double sigma01 = 0.4 * i / 200;
    const DensityMatrix sigma0 = fig1_state(sigma01);
    rows.push_back({sigma01, linear_entropy(time_average(sigma0, spec, w)),
                    linear_entropy(sigma0)});
  }
  return rows;
}

std::vector<Fig1RightRow> fig1_right_rows() {
  const EnergySpectrum spec = fig1_spectrum();
  const DensityMatrix low = fig1_state(0.25);
  const DensityMatrix high = fig1_state(0.35);
  std::vector<Fig1RightRow> rows;
  rows.reserve(501);
  for (int i = 0; i <= 500; ++i) {
    const double x = 10.0 * i / 500;
    const EvolutionWindow w(2.0 * x);
    rows.push_back({x, delta_s(low, spec, w), delta_s(high, spec, w)});
  }
  return rows;
}

void write_fig1_csv(const std::string& panel, std::ostream& out) {
  if (panel == "left") {
    out << "sigma01,S_reduced,S_global\n";
    for (const Fig1LeftRow& row : fig1_left_rows())
      out << fmt(row.sigma01) << ',' << fmt(row.s_reduced) << ','
          << fmt(row.s_global) << '\n';
  } else if (panel == "right") {
    out << "x,delta_S_025,delta_S_035\n";
    for (const Fig1RightRow& row : fig1_right_rows())
      out << fmt(row.x) << ',' << fmt(row.delta_s_025) << ','
          << fmt(row.delta_s_035) << '\n';
  } else {
    throw ConfigError("fig1 panel must be \"left\" or \"right\"");
  }
}

bool VerifyReport::all_pass() const {
  for (const CheckResult& check : checks)
    if (!check.pass) return false;
  return true;
}

namespace {

constexpr double kIdentityTol = 1e-12;
constexpr int kBatchSize = 200;

struct BatchInstance {
  DensityMatrix state;
  EnergySpectrum spec;
  double T;
};

BatchInstance random_instance(Rng& rng) {
  std::uniform_int_distribution<int> dim_dist(2, 6);
  std::uniform_real_distribution<double> t_dist(0.0, 10.0);
  const int d = dim_dist(rng);
  return {random_density(d, rng), random_spectrum(d, rng), t_dist(rng)};
}

CheckResult check_two_path(const ScenarioConfig& cfg, Rng& rng) {
  const EnergySpectrum spec = cfg.spectrum();
  double worst = 0.0;
  for (double value : cfg.window_values) {
    const double T = cfg.sweep_in_x ? 2.0 * cfg.hbar * value /
                                          (spec.level_groups().groups[1].energy -
                                           spec.level_groups().groups[0].energy)
                                    : value;
    const EvolutionWindow w(T, cfg.hbar);
    const double sum_form = delta_s(*cfg.state, spec, w);
    const double entropy_form =
        linear_entropy(time_average(*cfg.state, spec, w)) -
        linear_entropy(*cfg.state);
    worst = std::max(worst, std::abs(sum_form - entropy_form));
  }
  for (int i = 0; i < kBatchSize; ++i) {
    const BatchInstance inst = random_instance(rng);
    const EvolutionWindow w(inst.T);
    const double sum_form = delta_s(inst.state, inst.spec, w);
    const double entropy_form =
        linear_entropy(time_average(inst.state, inst.spec, w)) -
        linear_entropy(inst.state);
    worst = std::max(worst, std::abs(sum_form - entropy_form));
  }
  return {"two_path_delta_S", worst <= kIdentityTol, worst, kIdentityTol,
          "sum form vs entropy difference"};
}

CheckResult check_dephasing_identity(const ScenarioConfig& cfg, Rng& rng) {
  const EnergySpectrum spec = cfg.spectrum();
  double worst = std::abs(delta_s_max(*cfg.state, spec) -
                          (linear_entropy(dephase(*cfg.state, spec)) -
                           linear_entropy(*cfg.state)));
  for (int i = 0; i < kBatchSize; ++i) {
    const BatchInstance inst = random_instance(rng);
    const double direct = delta_s_max(inst.state, inst.spec);
    const double entropy_route =
        linear_entropy(dephase(inst.state, inst.spec)) -
        linear_entropy(inst.state);
    worst = std::max(worst, std::abs(direct - entropy_route));
  }
  return {"dephasing_identity", worst <= kIdentityTol, worst, kIdentityTol,
          "delta_S_max vs measurement entropy gain"};
}

CheckResult check_decomposition(const ScenarioConfig& cfg, Rng& rng) {
  const EnergySpectrum spec = cfg.spectrum();
  EntropyDecomposition dec =
      measurement_entropy_decomposition(*cfg.state, spec);
  double worst = std::abs(dec.total - (dec.spread + dec.conditional));
  for (int i = 0; i < kBatchSize; ++i) {
    const BatchInstance inst = random_instance(rng);
    dec = measurement_entropy_decomposition(inst.state, inst.spec);
    worst = std::max(worst, std::abs(dec.total - (dec.spread + dec.conditional)));
  }
  return {"entropy_decomposition", worst <= kIdentityTol, worst, kIdentityTol,
          "total vs spread + conditional"};
}

CheckResult check_short_time(const ScenarioConfig& cfg) {
  const EnergySpectrum spec = cfg.spectrum();
  const DensityMatrix& sigma0 = *cfg.state;
  const double dispersion = quantum_dispersion(sigma0, spec);
  if (dispersion <= kIdentityTol) {
    const double residual = delta_s(sigma0, spec, EvolutionWindow(1.0, cfg.hbar));
    return {"short_time_ratio", residual <= kIdentityTol, residual,
            kIdentityTol, "stationary state: delta_S must vanish"};
  }
  double omega_max = 0.0;
  for (int n = 0; n < spec.dim(); ++n)
    for (int m = 0; m < spec.dim(); ++m)
      omega_max = std::max(omega_max, spec.omega(n, m));
  const double t0 = 0.4 / omega_max;
  const auto discrepancy = [&](double t) {
    const EvolutionWindow w(t, cfg.hbar);
    return std::abs(delta_s(sigma0, spec, w) -
                    short_time_delta_s(sigma0, spec, w));
  };
  const double ratio = discrepancy(t0) / discrepancy(t0 / 4.0);
  return {"short_time_ratio", ratio >= 240.0 && ratio <= 272.0, ratio, 272.0,
          "O(T^4) discrepancy decay, quarter-T ratio in [240, 272]"};
}

CheckResult check_white_noise(const ScenarioConfig& cfg, Rng& rng) {
  const double alphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  double worst = 0.0;
  const auto run_one = [&](const PureState& psi, const EnergySpectrum& spec) {
    for (double alpha : alphas) {
      const DensityMatrix state = white_noise_state(psi, alpha);
      const WhiteNoisePredictions pred =
          white_noise_predictions(psi, alpha, spec);
      worst = std::max(worst,
                       std::abs(delta_s_max(state, spec) - pred.delta_s_max));
      worst = std::max(worst, std::abs(quantum_dispersion(state, spec) -
                                       pred.quantum_dispersion));
    }
  };
  const EnergySpectrum cfg_spec = cfg.spectrum();
  for (int i = 0; i < 20; ++i)
    run_one(random_pure_state(cfg_spec.dim(), rng), cfg_spec);
  std::uniform_int_distribution<int> dim_dist(2, 6);
  for (int i = 0; i < 20; ++i) {
    const int d = dim_dist(rng);
    const EnergySpectrum spec = random_spectrum(d, rng);
    run_one(random_pure_state(d, rng), spec);
  }
  return {"white_noise_laws", worst <= kIdentityTol, worst, kIdentityTol,
          "alpha^2 S_L[{p_E}] and 2 alpha^2 sigma_E^2"};
}

CheckResult check_von_neumann(const ScenarioConfig& cfg) {
  const EnergySpectrum spec = cfg.spectrum();
  const DensityMatrix& sigma0 = *cfg.state;
  if (quantum_dispersion(sigma0, spec) <= kIdentityTol) {
    const double residual = von_neumann_residual(sigma0, spec, 0.3, 1e-3);
    return {"von_neumann_order", residual <= kIdentityTol, residual,
            kIdentityTol, "stationary state: residual must vanish"};
  }
  const double r1 = von_neumann_residual(sigma0, spec, 0.3, 1e-3);
  const double r2 = von_neumann_residual(sigma0, spec, 0.3, 5e-4);
  const double r3 = von_neumann_residual(sigma0, spec, 0.3, 2.5e-4);
  const double ratio_a = r1 / r2;
  const double ratio_b = r2 / r3;
  const bool pass = ratio_a >= 3.8 && ratio_a <= 4.2 && ratio_b >= 3.8 &&
                    ratio_b <= 4.2;
  return {"von_neumann_order", pass, std::max(ratio_a, ratio_b), 4.2,
          "central-difference order, halving ratios in [3.8, 4.2]"};
}

CheckResult check_embedding(const ScenarioConfig& cfg, int max_dim) {
  const EnergySpectrum spec = cfg.spectrum();
  const DensityMatrix& sigma0 = *cfg.state;

  double t_ref = 0.0;
  for (double value : cfg.window_values) {
    const double T = cfg.sweep_in_x
                         ? 2.0 * cfg.hbar * value /
                               (spec.level_groups().groups[1].energy -
                                spec.level_groups().groups[0].energy)
                         : value;
    t_ref = std::max(t_ref, T);
  }
  if (t_ref <= 0.0)
    return {"embedding_oracle", true, 0.0, 0.0, "window has no T > 0; skipped"};

  // Conditional-state law at the smallest N.
  double tick_worst = 0.0;
  {
    const DiscreteClock clock(cfg.embedding_ticks.front(), t_ref);
    const CompositeScenario scenario = scenario_from_state(sigma0, spec, clock);
    const DensityMatrix rho_u = build_universe_density(scenario, max_dim);
    std::vector<DensityMatrix> seeds;
    ComplexMatrix mix = ComplexMatrix::Zero(spec.dim(), spec.dim());
    for (size_t j = 0; j < scenario.weights.size(); ++j)
      mix += scenario.weights[j] * (scenario.initial_states[j].amplitudes() *
                                    scenario.initial_states[j].amplitudes().adjoint());
    const DensityMatrix sigma_mix = DensityMatrix::unchecked(std::move(mix));
    for (int k = 0; k < clock.ticks; ++k) {
      const DensityMatrix relative =
          relative_state_at_tick(rho_u, k, spec.dim(), clock.ticks);
      const DensityMatrix expected = evolve(sigma_mix, spec, clock.tick_time(k));
      tick_worst = std::max(tick_worst, (relative.matrix() - expected.matrix())
                                            .cwiseAbs()
                                            .maxCoeff());
    }
  }
  if (tick_worst > kIdentityTol)
    return {"embedding_oracle", false, tick_worst, kIdentityTol,
            "relative tick states deviate from evolve"};

  const double analytic =
      delta_s(sigma0, spec, EvolutionWindow(t_ref, cfg.hbar));
  std::vector<double> errors;
  for (int n_ticks : cfg.embedding_ticks) {
    const DiscreteClock clock(n_ticks, t_ref);
    const CompositeScenario scenario = scenario_from_state(sigma0, spec, clock);
    const DensityMatrix rho_u = build_universe_density(scenario, max_dim);
    errors.push_back(
        std::abs(discrete_delta_s(rho_u, spec.dim(), n_ticks) - analytic));
  }

  bool pass = true;
  double worst_ratio = 0.0;
  bool any_pair = false;
  for (size_t i = 0; i + 1 < cfg.embedding_ticks.size(); ++i) {
    if (cfg.embedding_ticks[i + 1] != 2 * cfg.embedding_ticks[i]) continue;
    any_pair = true;
    const double ratio = errors[i] / errors[i + 1];
    worst_ratio = std::max(worst_ratio, ratio);
    if (!(ratio >= 3.0 && ratio <= 5.0)) pass = false;
  }
  if (!any_pair) {
    // No doubling pairs to test; require errors non-increasing with N.
    for (size_t i = 0; i + 1 < errors.size(); ++i)
      if (errors[i + 1] > errors[i]) pass = false;
    return {"embedding_oracle", pass, errors.back(), errors.front(),
            "discrete delta_S error non-increasing in N"};
  }
  return {"embedding_oracle", pass, worst_ratio, 5.0,
          "O(N^-2) convergence, doubling ratios in [3, 5]"};
}

}  // namespace

VerifyReport run_verify(const ScenarioConfig& cfg, std::uint64_t seed,
                        int max_dim) {
  Rng rng(seed);
  VerifyReport report;
  report.checks.push_back(check_two_path(cfg, rng));
  report.checks.push_back(check_dephasing_identity(cfg, rng));
  report.checks.push_back(check_decomposition(cfg, rng));
  report.checks.push_back(check_short_time(cfg));
  report.checks.push_back(check_white_noise(cfg, rng));
  report.checks.push_back(check_von_neumann(cfg));
  if (cfg.embedding_enabled)
    report.checks.push_back(check_embedding(cfg, max_dim));
  return report;
}

void write_verify_report(const VerifyReport& report, std::ostream& out) {
  for (const CheckResult& check : report.checks)
    out << (check.pass ? "PASS" : "FAIL") << "  " << check.name
        << "  value=" << fmt(check.residual)
        << "  threshold=" << fmt(check.threshold) << "  (" << check.note
        << ")\n";
  out << (report.all_pass() ? "all checks passed\n" : "CHECKS FAILED\n");
}

}  // namespace pwtime
