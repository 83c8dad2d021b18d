#include <doctest.h>

#include <string>

#include "caresim/config.hpp"
#include "caresim/replication.hpp"

using namespace caresim;

namespace {

bool contains(const std::string& text, const char* needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("empty document reproduces the built-in model") {
  const Experiment parsed = parse_experiment("{}");
  const Experiment defaults = default_experiment();
  CHECK(effective_config_json(parsed) == effective_config_json(defaults));
  CHECK(parsed.scenario.model.zones.size() == 18);
  CHECK(parsed.scenario.replications == 100);
  CHECK(parsed.scenario.master_seed == 42);
  CHECK(parsed.real_band_counts ==
        std::vector<double>{1193, 1776, 860, 1750, 2284});
}

TEST_CASE("sections override defaults independently") {
  const char* doc = R"({
    "month": {"days": 31},
    "arrivals": {"multiplier": 1.1},
    "service_times": {"call_center_capacity": 3},
    "experiment": {"replications": 10, "master_seed": 7,
                   "multipliers": [1.0, 1.2], "threshold_minutes": 20}
  })";
  const Experiment e = parse_experiment(doc);
  CHECK(e.scenario.model.days_in_month == 31);
  CHECK(e.scenario.arrival_multiplier == doctest::Approx(1.1));
  CHECK(e.scenario.model.service.call_center_capacity == 3);
  CHECK(e.scenario.replications == 10);
  CHECK(e.scenario.master_seed == 7);
  CHECK(e.scenario.sweep_multipliers == std::vector<double>{1.0, 1.2});
  CHECK(e.scenario.threshold_minutes == doctest::Approx(20.0));
  // Untouched sections keep their defaults.
  CHECK(e.scenario.model.zones.size() == 18);
  CHECK(e.scenario.model.service.transfer_max == doctest::Approx(10.0));
}

TEST_CASE("custom bands validate against their own counts by default") {
  const char* doc = R"({
    "arrivals": {"bands": [
      {"start_hour": 0, "end_hour": 12, "calls_per_month": 300},
      {"start_hour": 12, "end_hour": 24, "calls_per_month": 600}
    ]}
  })";
  const Experiment e = parse_experiment(doc);
  CHECK(e.real_band_counts == std::vector<double>{300, 600});
}

TEST_CASE("schema errors carry the offending path") {
  auto error_of = [](const char* doc) {
    try {
      parse_experiment(doc);
    } catch (const ConfigError& err) {
      return std::string(err.what());
    }
    return std::string("no error");
  };
  CHECK(contains(error_of(R"({"month": {"days": "thirty"}})"), "month.days"));
  CHECK(contains(error_of(R"({"experiment": {"replications": 1}})"),
                 "experiment.replications"));
  CHECK(contains(error_of(R"({"zones": [{"id": 1}]})"), "zones[0]"));
  CHECK(contains(error_of(R"({"arrivals": {"multiplier": 0}})"),
                 "arrivals.multiplier"));
  CHECK(contains(error_of(R"({"mystery": 1})"), "mystery"));
  CHECK(contains(error_of(R"({"validation": {"real_band_counts": [1, 2]}})"),
                 "real_band_counts"));
}

TEST_CASE("parse errors report the line") {
  try {
    parse_experiment("{\n  \"month\": {\n  oops\n}}", "bad.json");
    CHECK(false);
  } catch (const ConfigError& err) {
    CHECK(contains(err.what(), "bad.json:3"));
  }
}

TEST_CASE("model-level problems surface as config errors") {
  CHECK_THROWS_AS(
      parse_experiment(R"({"patrols": [{"name": "Solo", "zone_ids": [1]}]})"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_experiment(R"({"service_times": {"transfer_min": 20}})"),
      ConfigError);
}

TEST_CASE("effective config round-trips to identical runs") {
  const char* doc = R"({
    "arrivals": {"multiplier": 1.05},
    "experiment": {"replications": 3, "master_seed": 5}
  })";
  const Experiment original = parse_experiment(doc);
  const Experiment reparsed = parse_experiment(effective_config_json(original));
  CHECK(effective_config_json(original) == effective_config_json(reparsed));

  Scenario a = original.scenario;
  Scenario b = reparsed.scenario;
  a.horizon_days = b.horizon_days = 10.0;
  const auto ra = run_replications(a);
  const auto rb = run_replications(b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) CHECK(identical(ra[i], rb[i]));
}

TEST_CASE("missing file is a config error") {
  CHECK_THROWS_AS(load_experiment("/nonexistent/config.json"), ConfigError);
}
