#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caresim/care_model.hpp"
#include "caresim/stats_accum.hpp"

namespace caresim {

inline constexpr int kDayTypeBuckets = 2;  // weekday, weekend

inline bool tally_equal(const TallyStat& a, const TallyStat& b) {
  return a.count == b.count && a.sum == b.sum && a.sum_squares == b.sum_squares &&
         a.min == b.min && a.max == b.max;
}

struct ResourceSummary {
  std::string name;
  double busy_hours[kDayTypeBuckets] = {0.0, 0.0};
  double capacity_hours[kDayTypeBuckets] = {0.0, 0.0};
  TallyStat queue_wait_min[kDayTypeBuckets];
  std::int64_t max_queue_len[kDayTypeBuckets] = {0, 0};
  double time_avg_queue_len = 0.0;
};

// Everything one replication reports. Durations are in minutes; integrals in
// unit-hours.
struct ReplicationSummary {
  int replication_index = 0;
  double horizon_hours = 0.0;
  std::vector<std::int64_t> band_counts;
  std::int64_t arrivals = 0;
  std::int64_t completed = 0;
  std::int64_t in_flight = 0;
  TallyStat call_center_min;
  TallyStat transfer_min;
  TallyStat total_wait_min;
  TallyStat assist_min;
  TallyStat nurse_queue_wait_min;
  double p95_total_wait_min = 0.0;
  double max_queue_wait_min = 0.0;  // worst nurse-queue wait in this run
  std::vector<ResourceSummary> resources;
};

bool identical(const ReplicationSummary& a, const ReplicationSummary& b);

// One independent run. Streams are derived from (master_seed, stream id,
// replication_index), so results do not depend on execution order.
ReplicationSummary simulate_replication(const ModelConfig& model,
                                        double arrival_multiplier,
                                        double horizon_days,
                                        std::uint64_t master_seed,
                                        int replication_index);

struct Scenario {
  ModelConfig model;
  double horizon_days = 30.0;  // length of one replication
  double arrival_multiplier = 1.0;
  int replications = 100;
  std::uint64_t master_seed = 42;
  double threshold_minutes = 25.0;
  std::vector<double> sweep_multipliers = {1.0, 1.05, 1.10, 1.15};
};

// OpenMP-parallel replication runner. Summaries come back ordered by
// replication index and are bit-identical to the serial reference whatever
// the thread count. Throws std::invalid_argument for fewer than 2
// replications (confidence intervals need at least that).
std::vector<ReplicationSummary> run_replications(const Scenario& scenario);

// Serial reference implementation, kept for testing and benchmarking.
std::vector<ReplicationSummary> run_replications_serial(const Scenario& scenario);

}  // namespace caresim
