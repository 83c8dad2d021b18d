#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "caresim/rate_schedule.hpp"
#include "caresim/rng.hpp"
#include "caresim/stats_accum.hpp"

namespace caresim {

enum class DayType { weekday, weekend };
enum class Shift { day, evening };

constexpr double kHoursPerWeek = 168.0;
constexpr double kWeekdayHours = 120.0;  // Monday 00:00 .. Saturday 00:00
constexpr double kEveningStartHour = 21.0;
constexpr double kEveningEndHour = 7.0;

// t = 0 is Monday 00:00.
inline DayType classify_day_type(SimTime t) {
  return std::fmod(t, kHoursPerWeek) > kWeekdayHours ? DayType::weekend
                                                     : DayType::weekday;
}

// Evening covers [21:00, 07:00), matching the overnight arrival band.
inline Shift classify_shift(SimTime t) {
  const double h = std::fmod(t, 24.0);
  return (h >= kEveningStartHour || h < kEveningEndHour) ? Shift::evening
                                                         : Shift::day;
}

struct Zone {
  int id = 0;  // 1..18
  std::string name;
  int weekday_staff = 0;
  int weekend_staff = 0;
  double arrival_weight = 0.0;  // defaults to weekday_staff when unset
};

struct NightPatrol {
  std::string name;
  std::vector<int> zone_ids;
  int units = 6;
};

struct ServiceTimeConfig {
  // Minutes. Uniform draws over each range. The operator/contact ranges and
  // the call-center staffing are calibrated so that the default load sweep
  // stays acceptable through +10% arrivals and crosses the 25-minute limit
  // at +15%.
  double transfer_min = 4.0, transfer_max = 10.0;
  double assist_min = 10.0, assist_max = 60.0;
  double operator_min = 1.15, operator_max = 3.15;
  double contact_min = 1.0, contact_max = 2.0;
  int call_center_capacity = 1;
};

struct ModelConfig {
  std::vector<Zone> zones;       // ids exactly 1..18, in order
  std::vector<NightPatrol> patrols;  // partition of the zone ids
  ServiceTimeConfig service;
  std::vector<BandCount> arrival_bands;
  int days_in_month = 30;

  RateSchedule rate_schedule() const {
    return RateSchedule::from_monthly_counts(arrival_bands, days_in_month);
  }

  // Throws std::invalid_argument on a malformed model.
  void validate() const;
};

// The built-in model: 18 zones with their weekday/weekend staffing, the four
// night patrols and their zone assignments, the five arrival bands calibrated
// from one month of call counts, and the service-time defaults.
ModelConfig default_model();

// Real monthly call counts per arrival band, used by the validation command.
std::vector<double> default_real_band_counts();

// Weight-proportional zone draw; returns a zone id.
int assign_zone(const std::vector<Zone>& zones, RandomStream& stream);

// Resource indexing: 0 = call center, 1..n_zones = care groups,
// n_zones+1 .. n_zones+n_patrols = night patrols.
constexpr int kCallCenterIndex = 0;

inline int care_group_index(int zone_id) { return zone_id; }

// Which resource serves a patient from `zone_id` under the given day type and
// shift. Day shift: the zone's care group (capacity depends on day type
// through the group's schedule). Evening: the night patrol covering the zone.
int select_resource(const ModelConfig& model, int zone_id, DayType day_type,
                    Shift shift);

// Capacity schedules. Care groups staff the day shift with their weekday or
// weekend headcount and stand down in the evening; patrols cover exactly the
// evening band.
std::function<int(SimTime)> care_group_capacity(int weekday_staff,
                                                int weekend_staff);
std::function<int(SimTime)> patrol_capacity(int units);

}  // namespace caresim
