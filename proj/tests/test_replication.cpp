#include <doctest.h>

#include <cmath>

#include "caresim/config.hpp"
#include "caresim/replication.hpp"

using namespace caresim;

namespace {

// One shared full-size baseline set; several tests read it.
const std::vector<ReplicationSummary>& baseline_reps() {
  static const std::vector<ReplicationSummary> reps = [] {
    Scenario s = default_experiment().scenario;
    s.replications = 100;
    return run_replications(s);
  }();
  return reps;
}

Scenario small_scenario() {
  Scenario s = default_experiment().scenario;
  s.replications = 12;
  s.horizon_days = 10.0;
  return s;
}

}  // namespace

TEST_CASE("parallel runner reproduces the serial reference bit for bit") {
  Scenario s = small_scenario();
  const auto serial = run_replications_serial(s);
  const auto parallel = run_replications(s);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].replication_index == static_cast<int>(i));
    CHECK(identical(serial[i], parallel[i]));
  }
}

TEST_CASE("same master seed reproduces the whole summary list") {
  Scenario s = small_scenario();
  const auto a = run_replications(s);
  const auto b = run_replications(s);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(identical(a[i], b[i]));

  s.master_seed = 43;
  const auto c = run_replications(s);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!identical(a[i], c[i])) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("fewer than two replications is an error") {
  Scenario s = small_scenario();
  s.replications = 1;
  CHECK_THROWS_AS(run_replications(s), std::invalid_argument);
  CHECK_THROWS_AS(run_replications_serial(s), std::invalid_argument);
}

TEST_CASE("zero-rate model produces empty runs") {
  Scenario s = small_scenario();
  s.replications = 2;
  for (auto& b : s.model.arrival_bands) b.calls_per_month = 0.0;
  const auto reps = run_replications(s);
  for (const auto& r : reps) {
    CHECK(r.arrivals == 0);
    CHECK(r.completed == 0);
    for (auto c : r.band_counts) CHECK(c == 0);
  }
}

TEST_CASE("replication totals are serially uncorrelated") {
  const auto& reps = baseline_reps();
  std::vector<double> totals;
  for (const auto& r : reps) totals.push_back(static_cast<double>(r.arrivals));
  const int n = static_cast<int>(totals.size());
  double mean = 0.0;
  for (double t : totals) mean += t;
  mean /= n;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    den += (totals[i] - mean) * (totals[i] - mean);
    if (i + 1 < n) num += (totals[i] - mean) * (totals[i + 1] - mean);
  }
  const double lag1 = num / den;
  CHECK(std::abs(lag1) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("baseline wait components behave like the model says") {
  const auto& reps = baseline_reps();

  TallyStat transfer, assist;
  double evening = 0.0, total = 0.0;
  for (const auto& r : reps) {
    transfer.merge(r.transfer_min);
    assist.merge(r.assist_min);
    evening += static_cast<double>(r.band_counts.back());  // 21:00-07:00 band
    total += static_cast<double>(r.arrivals);
  }
  // Uniform(4,10) means 7 minutes.
  CHECK(transfer.mean() == doctest::Approx(7.0).epsilon(0.02));
  CHECK(transfer.min >= 4.0);
  CHECK(transfer.max <= 10.0);
  CHECK(assist.min >= 10.0);
  CHECK(assist.max <= 60.0);

  // Overnight share of arrivals: 2284 out of 7863.
  const double p = 2284.0 / 7863.0;
  const double se = std::sqrt(p * (1 - p) / total);
  CHECK(std::abs(evening / total - p) < 3.0 * se);
}

TEST_CASE("baseline conservation and capacity accounting hold in every run") {
  for (const auto& r : baseline_reps()) {
    CHECK(r.arrivals == r.completed + r.in_flight);
    std::int64_t band_sum = 0;
    for (auto c : r.band_counts) band_sum += c;
    CHECK(band_sum == r.arrivals);
    for (const auto& res : r.resources)
      for (int b = 0; b < kDayTypeBuckets; ++b) {
        CHECK(res.busy_hours[b] >= 0.0);
        CHECK(res.busy_hours[b] <= res.capacity_hours[b] + 1e-9);
      }
  }
}

TEST_CASE("day care groups keep no meaningful queue at baseline") {
  const auto& reps = baseline_reps();
  const std::size_t n_zones = 18;
  for (std::size_t z = 1; z <= n_zones; ++z) {
    double avg = 0.0;
    for (const auto& r : reps) avg += r.resources[z].time_avg_queue_len;
    avg /= static_cast<double>(reps.size());
    CHECK(avg < 0.01);
  }
}
