#include "caresim/care_model.hpp"

#include <set>
#include <stdexcept>

namespace caresim {

ModelConfig default_model() {
  ModelConfig m;
  m.zones = {
      {1, "Anna Trolle", 19, 11, 19},
      {2, "Dalbo", 12, 7, 12},
      {3, "Teleborg", 13, 9, 13},
      {4, "Rottne", 9, 9, 9},
      {5, "Centrum", 16, 8, 16},
      {6, "Soder", 10, 7, 10},
      {7, "Lammhult", 15, 6, 15},
      {8, "Lassaskog", 12, 7, 12},
      {9, "Ojaby", 10, 6, 10},
      {10, "Sandsbro", 10, 6, 10},
      {11, "Hovslund", 7, 6, 7},
      {12, "Borgmastaren", 9, 5, 9},
      {13, "Oster", 10, 6, 10},
      {14, "Oster Aryd", 5, 3, 5},
      {15, "Kinnevald", 9, 5, 9},
      {16, "Gemla", 5, 4, 5},
      {17, "Kvarngarden", 10, 5, 10},
      {18, "Sjoliden", 9, 4, 9},
  };
  m.patrols = {
      {"North", {18, 4, 7}, 6},
      {"East", {10, 11, 13, 14, 1}, 6},
      {"South", {2, 6, 17, 3}, 6},
      {"West", {5, 8, 12, 9, 16, 15}, 6},
  };
  m.arrival_bands = {
      {7, 10, 1193},
      {10, 14, 1776},
      {14, 16, 860},
      {16, 21, 1750},
      {21, 7, 2284},
  };
  m.days_in_month = 30;
  return m;
}

std::vector<double> default_real_band_counts() {
  return {1193, 1776, 860, 1750, 2284};
}

void ModelConfig::validate() const {
  if (zones.empty()) throw std::invalid_argument("model: no zones");
  for (std::size_t i = 0; i < zones.size(); ++i) {
    const Zone& z = zones[i];
    if (z.id != static_cast<int>(i) + 1)
      throw std::invalid_argument("model: zone ids must be 1..n in order");
    if (z.weekday_staff <= 0 || z.weekend_staff <= 0)
      throw std::invalid_argument("model: zone '" + z.name + "': staff must be positive");
    if (z.arrival_weight <= 0.0)
      throw std::invalid_argument("model: zone '" + z.name + "': arrival weight must be positive");
  }
  std::set<int> covered;
  for (const NightPatrol& p : patrols) {
    if (p.units <= 0)
      throw std::invalid_argument("model: patrol '" + p.name + "': units must be positive");
    for (int z : p.zone_ids) {
      if (z < 1 || z > static_cast<int>(zones.size()))
        throw std::invalid_argument("model: patrol '" + p.name + "': unknown zone id");
      if (!covered.insert(z).second)
        throw std::invalid_argument("model: patrol zone sets overlap");
    }
  }
  if (covered.size() != zones.size())
    throw std::invalid_argument("model: patrol zone sets do not cover all zones");

  const ServiceTimeConfig& s = service;
  auto check_range = [](double lo, double hi, const char* what) {
    if (lo <= 0.0 || hi < lo)
      throw std::invalid_argument(std::string("model: bad ") + what + " range");
  };
  check_range(s.transfer_min, s.transfer_max, "transfer");
  check_range(s.assist_min, s.assist_max, "assist");
  check_range(s.operator_min, s.operator_max, "operator");
  check_range(s.contact_min, s.contact_max, "contact");
  if (s.call_center_capacity <= 0)
    throw std::invalid_argument("model: call center capacity must be positive");

  rate_schedule();  // throws if the bands do not partition the day
}

int assign_zone(const std::vector<Zone>& zones, RandomStream& stream) {
  double total = 0.0;
  for (const Zone& z : zones) total += z.arrival_weight;
  double u = stream.uniform01() * total;
  for (const Zone& z : zones) {
    u -= z.arrival_weight;
    if (u < 0.0) return z.id;
  }
  return zones.back().id;
}

std::function<int(SimTime)> care_group_capacity(int weekday_staff,
                                                int weekend_staff) {
  return [weekday_staff, weekend_staff](SimTime t) {
    if (classify_shift(t) == Shift::evening) return 0;
    return classify_day_type(t) == DayType::weekend ? weekend_staff
                                                    : weekday_staff;
  };
}

std::function<int(SimTime)> patrol_capacity(int units) {
  return [units](SimTime t) {
    return classify_shift(t) == Shift::evening ? units : 0;
  };
}

int select_resource(const ModelConfig& model, int zone_id, DayType,
                    Shift shift) {
  if (zone_id < 1 || zone_id > static_cast<int>(model.zones.size()))
    throw std::invalid_argument("select_resource: zone id out of range");
  if (shift == Shift::day) return care_group_index(zone_id);
  for (std::size_t p = 0; p < model.patrols.size(); ++p)
    for (int z : model.patrols[p].zone_ids)
      if (z == zone_id)
        return static_cast<int>(model.zones.size() + 1 + p);
  throw std::logic_error("select_resource: zone not covered by any patrol");
}

}  // namespace caresim
