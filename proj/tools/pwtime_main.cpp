#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pwtime/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitUsage;
  }
  out << contents;
  if (!out) {
    std::cerr << "error: failed writing output file: " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_fig1(const std::string& panel, const std::string& out_path) {
  std::ostringstream csv;
  pwtime::write_fig1_csv(panel, csv);
  return write_file(out_path, csv.str());
}

int run_verify_cmd(const std::string& config_path, std::uint64_t seed,
                   int max_dim) {
  const pwtime::ScenarioConfig cfg = pwtime::load_config(config_path);
  const pwtime::VerifyReport report = pwtime::run_verify(cfg, seed, max_dim);
  pwtime::write_verify_report(report, std::cout);
  return report.all_pass() ? kExitOk : kExitCheckFailure;
}

int run_sweep_cmd(const std::string& config_path, std::string out_path,
                  int max_dim) {
  const pwtime::ScenarioConfig cfg = pwtime::load_config(config_path);
  if (out_path.empty()) out_path = cfg.output_path;
  if (out_path.empty()) {
    std::cerr << "error: no output path (use --out or config output.path)\n";
    return kExitUsage;
  }
  const std::vector<pwtime::SweepRow> rows = pwtime::run_sweep(cfg, max_dim);
  std::ostringstream csv;
  pwtime::write_sweep_csv(rows, csv);
  return write_file(out_path, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clock-conditioned dynamics, time-averaged states, and the "
               "linear-entropy entanglement indicator"};
  app.require_subcommand(1);

  std::string panel = "right";
  std::string out_path;
  std::string config_path;
  std::uint64_t seed = 12345;
  int max_dim = pwtime::kMaxCompositeDim;

  CLI::App* fig1 = app.add_subcommand(
      "fig1", "Emit the qubit reference curves as CSV");
  fig1->add_option("--panel", panel, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  fig1->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the identity checks on a scenario config");
  verify->add_option("--config", config_path, "scenario config (JSON)")
      ->required();
  verify->add_option("--seed", seed, "seed for the randomized batches");
  verify->add_option("--max-dim", max_dim, "composite dimension cap");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate a scenario over its window grid, emit CSV");
  sweep->add_option("--config", config_path, "scenario config (JSON)")
      ->required();
  sweep->add_option("--out", out_path, "output CSV path");
  sweep->add_option("--max-dim", max_dim, "composite dimension cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fig1->parsed()) return run_fig1(panel, out_path);
    if (verify->parsed()) return run_verify_cmd(config_path, seed, max_dim);
    if (sweep->parsed()) return run_sweep_cmd(config_path, out_path, max_dim);
  } catch (const pwtime::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Covers validation, weight, dimension, and lookup errors from parsing.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
