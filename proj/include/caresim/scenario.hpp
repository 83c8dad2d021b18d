#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caresim/confidence.hpp"
#include "caresim/replication.hpp"

namespace caresim {

struct SweepRow {
  double multiplier = 1.0;
  double call_center_min = 0.0;
  double transfer_min = 0.0;
  double total_wait_min = 0.0;
  double p95_total_wait_min = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  double threshold_minutes = 25.0;
  std::optional<double> knee_multiplier;  // smallest multiplier past threshold
};

struct UtilizationRow {
  std::string resource;
  std::string day_type;  // "weekday", "weekend", or "all" for patrols
  std::optional<double> utilization;
};

struct UtilizationReport {
  std::vector<UtilizationRow> rows;
};

struct QueueRow {
  std::string resource;
  std::string day_type;
  double mean_queue_wait_min = 0.0;
  double max_queue_wait_min = 0.0;  // mean over runs of each run's maximum
  double max_queue_len = 0.0;       // same aggregation
};

struct QueueReport {
  std::vector<QueueRow> rows;
};

struct RunSummary {
  int replications = 0;
  double multiplier = 1.0;
  double horizon_days = 0.0;
  std::vector<std::string> band_labels;
  std::vector<ConfidenceInterval> band_count_cis;
  ConfidenceInterval total_count_ci;
  double completed_mean = 0.0;
  double in_flight_mean = 0.0;
  double call_center_min = 0.0;
  double transfer_min = 0.0;
  double total_wait_min = 0.0;
  double p95_total_wait_min = 0.0;
  double max_queue_wait_min = 0.0;
};

std::string band_label(double start_hour, double end_hour);

// One replication set per multiplier, all under the same master seed and
// stream ids (common random numbers), so row differences reflect load alone.
SweepReport run_sweep(const Scenario& base, const std::vector<double>& multipliers,
                      bool serial_runner = false);

RunSummary summarize_run(const Scenario& scenario,
                         const std::vector<ReplicationSummary>& reps);

// 18 care groups x weekday/weekend plus one row per patrol.
UtilizationReport utilization_report(const Scenario& scenario,
                                     const std::vector<ReplicationSummary>& reps);

// Per resource and day type; means pool every queue pass, maxima average the
// per-run maxima.
QueueReport queue_report(const Scenario& scenario,
                         const std::vector<ReplicationSummary>& reps);

// Validation of simulated band counts against real monthly counts.
std::vector<BandValidation> validate_against_real(
    const Scenario& scenario, const std::vector<double>& real_band_counts,
    const std::vector<ReplicationSummary>& reps, double level = 0.95);

// Machine-readable (CSV, fixed column names) and aligned-text renderings.
std::string to_csv(const SweepReport& report);
std::string to_csv(const UtilizationReport& report);
std::string to_csv(const QueueReport& report);
std::string to_csv(const RunSummary& summary);
std::string to_csv(const std::vector<BandValidation>& rows);
std::string to_text(const SweepReport& report);
std::string to_text(const UtilizationReport& report);
std::string to_text(const QueueReport& report);
std::string to_text(const RunSummary& summary);
std::string to_text(const std::vector<BandValidation>& rows);

}  // namespace caresim
