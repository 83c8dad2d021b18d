#include <doctest.h>

#include "caresim/config.hpp"
#include "caresim/scenario.hpp"

using namespace caresim;

namespace {

Scenario quick_scenario(int reps = 6, double horizon_days = 30.0) {
  Scenario s = default_experiment().scenario;
  s.replications = reps;
  s.horizon_days = horizon_days;
  return s;
}

bool starts_with(const std::string& text, const char* prefix) {
  return text.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("sweep argument checking") {
  const Scenario s = quick_scenario(2);
  CHECK_THROWS_AS(run_sweep(s, {}), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(s, {1.0, 0.9}), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(s, {-1.0}), std::invalid_argument);
}

TEST_CASE("repeated multiplier rows are identical under common random numbers") {
  const Scenario s = quick_scenario(4);
  const SweepReport r = run_sweep(s, {1.0, 1.0});
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].call_center_min == r.rows[1].call_center_min);
  CHECK(r.rows[0].total_wait_min == r.rows[1].total_wait_min);
  CHECK(r.rows[0].p95_total_wait_min == r.rows[1].p95_total_wait_min);
}

TEST_CASE("waiting time grows with load") {
  const Scenario s = quick_scenario(6);
  const SweepReport r = run_sweep(s, {1.0, 1.5});
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[1].total_wait_min >= r.rows[0].total_wait_min);
}

TEST_CASE("knee threshold logic") {
  const Scenario s = quick_scenario(4, 10);
  SUBCASE("zero threshold trips on the first row") {
    Scenario t = s;
    t.threshold_minutes = 0.0;
    const SweepReport r = run_sweep(t, {1.0, 1.05});
    REQUIRE(r.knee_multiplier.has_value());
    CHECK(*r.knee_multiplier == 1.0);
  }
  SUBCASE("unreachable threshold reports no knee") {
    Scenario t = s;
    t.threshold_minutes = 1e9;
    const SweepReport r = run_sweep(t, {1.0});
    CHECK_FALSE(r.knee_multiplier.has_value());
  }
}

TEST_CASE("utilization report has 18 zones x 2 day types plus 4 patrol rows") {
  const Scenario s = quick_scenario(4, 10);
  const auto reps = run_replications(s);
  const UtilizationReport r = utilization_report(s, reps);
  REQUIRE(r.rows.size() == 18 * 2 + 4);
  int weekday_rows = 0, weekend_rows = 0, patrol_rows = 0;
  for (const auto& row : r.rows) {
    if (row.day_type == "weekday") ++weekday_rows;
    if (row.day_type == "weekend") ++weekend_rows;
    if (row.day_type == "all") ++patrol_rows;
    if (row.utilization) {
      CHECK(*row.utilization >= 0.0);
      CHECK(*row.utilization <= 1.0);
    }
  }
  CHECK(weekday_rows == 18);
  CHECK(weekend_rows == 18);
  CHECK(patrol_rows == 4);
}

TEST_CASE("starved and saturated resources hit the utilization extremes") {
  Scenario s = quick_scenario(3, 10);
  // All calls from zone 1; tiny patrols and a heavy overnight load.
  for (auto& z : s.model.zones) z.arrival_weight = 1e-9;
  s.model.zones[0].arrival_weight = 1.0;
  for (auto& p : s.model.patrols) p.units = 1;
  for (auto& b : s.model.arrival_bands) b.calls_per_month = 0.0;
  s.model.arrival_bands.back().calls_per_month = 9000.0;  // 21:00-07:00

  const auto reps = run_replications(s);
  const UtilizationReport r = utilization_report(s, reps);

  std::optional<double> east, dalbo_weekday;
  for (const auto& row : r.rows) {
    if (row.resource == "East patrol") east = row.utilization;
    if (row.resource == "Dalbo" && row.day_type == "weekday")
      dalbo_weekday = row.utilization;
  }
  REQUIRE(east.has_value());         // zone 1 belongs to the East patrol
  CHECK(*east > 0.99);               // one unit against ~30 calls a night
  REQUIRE(dalbo_weekday.has_value());
  CHECK(*dalbo_weekday == doctest::Approx(0.0));  // never seized
}

TEST_CASE("queue report covers every resource and both day types") {
  const Scenario s = quick_scenario(4, 10);
  const auto reps = run_replications(s);
  const QueueReport r = queue_report(s, reps);
  REQUIRE(r.rows.size() == (1 + 18 + 4) * 2);
  for (const auto& row : r.rows) {
    CHECK(row.mean_queue_wait_min >= 0.0);
    CHECK(row.max_queue_wait_min >= row.mean_queue_wait_min - 1e-9);
  }
}

TEST_CASE("an unloaded system shows empty nurse queues") {
  Scenario s = quick_scenario(3, 10);
  for (auto& b : s.model.arrival_bands) b.calls_per_month = 30.0;  // one call/day
  const auto reps = run_replications(s);
  const QueueReport r = queue_report(s, reps);
  for (const auto& row : r.rows) {
    if (row.resource == "call_center") continue;
    CHECK(row.mean_queue_wait_min == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(row.max_queue_len <= 1.0);
  }
}

TEST_CASE("default calibration passes its own validation") {
  Experiment e = default_experiment();
  e.scenario.replications = 100;
  const auto reps = run_replications(e.scenario);
  const auto rows = validate_against_real(e.scenario, e.real_band_counts, reps);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) CHECK(r.pass);

  // Real counts 50% higher than calibration cannot sit inside the intervals.
  std::vector<double> inflated = e.real_band_counts;
  for (double& c : inflated) c *= 1.5;
  const auto bad = validate_against_real(e.scenario, inflated, reps);
  for (const auto& r : bad) CHECK_FALSE(r.pass);
}

TEST_CASE("csv headers are stable") {
  const Scenario s = quick_scenario(2, 10);
  const auto reps = run_replications(s);
  CHECK(starts_with(
      to_csv(run_sweep(s, {1.0})),
      "multiplier,call_center_min,transfer_min,total_wait_min,p95_total_wait_min\n"));
  CHECK(starts_with(to_csv(utilization_report(s, reps)),
                    "resource,day_type,utilization\n"));
  CHECK(starts_with(
      to_csv(queue_report(s, reps)),
      "resource,day_type,mean_queue_wait_min,max_queue_wait_min,max_queue_len\n"));
  CHECK(starts_with(to_csv(summarize_run(s, reps)), "metric,value\n"));
  CHECK(starts_with(to_csv(validate_against_real(s, default_real_band_counts(), reps)),
                    "band,real,mean,lower,upper,pass\n"));
}

TEST_CASE("band labels render as clock ranges") {
  CHECK(band_label(7, 10) == "07:00-10:00");
  CHECK(band_label(21, 7) == "21:00-07:00");
  CHECK(band_label(13.5, 24) == "13:30-00:00");
}
