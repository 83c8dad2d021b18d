#include "caresim/replication.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace caresim {

namespace {

bool resource_equal(const ResourceSummary& a, const ResourceSummary& b) {
  if (a.name != b.name || a.time_avg_queue_len != b.time_avg_queue_len)
    return false;
  for (int i = 0; i < kDayTypeBuckets; ++i) {
    if (a.busy_hours[i] != b.busy_hours[i]) return false;
    if (a.capacity_hours[i] != b.capacity_hours[i]) return false;
    if (a.max_queue_len[i] != b.max_queue_len[i]) return false;
    if (!tally_equal(a.queue_wait_min[i], b.queue_wait_min[i])) return false;
  }
  return true;
}

}  // namespace

bool identical(const ReplicationSummary& a, const ReplicationSummary& b) {
  if (a.replication_index != b.replication_index) return false;
  if (a.horizon_hours != b.horizon_hours) return false;
  if (a.band_counts != b.band_counts) return false;
  if (a.arrivals != b.arrivals || a.completed != b.completed ||
      a.in_flight != b.in_flight)
    return false;
  if (!tally_equal(a.call_center_min, b.call_center_min)) return false;
  if (!tally_equal(a.transfer_min, b.transfer_min)) return false;
  if (!tally_equal(a.total_wait_min, b.total_wait_min)) return false;
  if (!tally_equal(a.assist_min, b.assist_min)) return false;
  if (!tally_equal(a.nurse_queue_wait_min, b.nurse_queue_wait_min)) return false;
  if (a.p95_total_wait_min != b.p95_total_wait_min) return false;
  if (a.max_queue_wait_min != b.max_queue_wait_min) return false;
  if (a.resources.size() != b.resources.size()) return false;
  for (std::size_t i = 0; i < a.resources.size(); ++i)
    if (!resource_equal(a.resources[i], b.resources[i])) return false;
  return true;
}

std::vector<ReplicationSummary> run_replications(const Scenario& scenario) {
  if (scenario.replications < 2)
    throw std::invalid_argument("run_replications: need at least 2 replications");
  scenario.model.validate();

  const int n = scenario.replications;
  std::vector<ReplicationSummary> out(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    out[i] = simulate_replication(scenario.model, scenario.arrival_multiplier,
                                  scenario.horizon_days, scenario.master_seed, i);
  }
  return out;
}

std::vector<ReplicationSummary> run_replications_serial(const Scenario& scenario) {
  if (scenario.replications < 2)
    throw std::invalid_argument("run_replications: need at least 2 replications");
  scenario.model.validate();

  std::vector<ReplicationSummary> out;
  out.reserve(scenario.replications);
  for (int i = 0; i < scenario.replications; ++i)
    out.push_back(simulate_replication(scenario.model, scenario.arrival_multiplier,
                                       scenario.horizon_days,
                                       scenario.master_seed, i));
  return out;
}

}  // namespace caresim
