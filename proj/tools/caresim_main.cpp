#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "caresim/config.hpp"
#include "caresim/scenario.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::optional<double> multiplier;
  std::string out_dir = ".";
  std::string format = "csv";
  bool serial = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "configuration file (JSON)");
  cmd->add_option("--seed", opt.seed, "master seed override");
  cmd->add_option("--reps", opt.reps, "replication count override");
  cmd->add_option("--multiplier", opt.multiplier, "arrival multiplier override");
  cmd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--format", opt.format, "report file format")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();
  cmd->add_flag("--serial", opt.serial, "use the serial replication runner");
}

caresim::Experiment load(const CommonOptions& opt) {
  caresim::Experiment e = opt.config_path.empty()
                              ? caresim::default_experiment()
                              : caresim::load_experiment(opt.config_path);
  if (opt.seed) e.scenario.master_seed = *opt.seed;
  if (opt.reps) {
    if (*opt.reps < 2) throw caresim::ConfigError("--reps: must be >= 2");
    e.scenario.replications = *opt.reps;
  }
  if (opt.multiplier) {
    if (*opt.multiplier <= 0.0) throw caresim::ConfigError("--multiplier: must be > 0");
    e.scenario.arrival_multiplier = *opt.multiplier;
  }
  return e;
}

// Reports are staged next to the target and renamed into place, so a file is
// either absent or complete.
void write_report(const fs::path& dir, const std::string& stem,
                  const std::string& format, const std::string& content) {
  fs::create_directories(dir);
  const fs::path target = dir / (stem + (format == "csv" ? ".csv" : ".txt"));
  const fs::path staging = target.string() + ".tmp";
  {
    std::ofstream out(staging, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + staging.string());
  }
  fs::rename(staging, target);
}

std::vector<caresim::ReplicationSummary> run_reps(const caresim::Scenario& s,
                                                  bool serial) {
  return serial ? caresim::run_replications_serial(s)
                : caresim::run_replications(s);
}

int cmd_run(const CommonOptions& opt) {
  const caresim::Experiment e = load(opt);
  const auto reps = run_reps(e.scenario, opt.serial);
  const auto summary = caresim::summarize_run(e.scenario, reps);
  const auto util = caresim::utilization_report(e.scenario, reps);
  const auto queues = caresim::queue_report(e.scenario, reps);

  const bool csv = opt.format == "csv";
  write_report(opt.out_dir, "run_summary", opt.format,
               csv ? to_csv(summary) : to_text(summary));
  write_report(opt.out_dir, "utilization", opt.format,
               csv ? to_csv(util) : to_text(util));
  write_report(opt.out_dir, "queues", opt.format,
               csv ? to_csv(queues) : to_text(queues));
  std::cout << to_text(summary);
  return 0;
}

int cmd_validate(const CommonOptions& opt) {
  const caresim::Experiment e = load(opt);
  const auto reps = run_reps(e.scenario, opt.serial);
  const auto rows = caresim::validate_against_real(e.scenario, e.real_band_counts, reps);

  const bool csv = opt.format == "csv";
  write_report(opt.out_dir, "validation", opt.format,
               csv ? to_csv(rows) : to_text(rows));
  std::cout << to_text(rows);
  bool all_pass = true;
  for (const auto& r : rows) all_pass = all_pass && r.pass;
  std::cout << (all_pass ? "validation PASSED\n" : "validation FAILED\n");
  return all_pass ? 0 : 1;
}

int cmd_sweep(const CommonOptions& opt) {
  const caresim::Experiment e = load(opt);
  const auto report =
      caresim::run_sweep(e.scenario, e.scenario.sweep_multipliers, opt.serial);

  const bool csv = opt.format == "csv";
  write_report(opt.out_dir, "sweep", opt.format,
               csv ? to_csv(report) : to_text(report));
  std::cout << to_text(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"care-alarm dispatch simulator"};
  app.require_subcommand(1);

  CommonOptions run_opt, validate_opt, sweep_opt;
  CLI::App* run = app.add_subcommand("run", "simulate one scenario and write reports");
  add_common_flags(run, run_opt);
  CLI::App* validate = app.add_subcommand(
      "validate", "check real monthly counts against simulated confidence intervals");
  add_common_flags(validate, validate_opt);
  CLI::App* sweep = app.add_subcommand(
      "sweep", "waiting-time table across arrival multipliers");
  add_common_flags(sweep, sweep_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (validate->parsed()) return cmd_validate(validate_opt);
    if (sweep->parsed()) return cmd_sweep(sweep_opt);
  } catch (const caresim::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
