#include "caresim/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace caresim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

template <typename T, typename Getter>
void maybe(const json& obj, const char* key, const std::string& path, T& out,
           Getter getter) {
  if (obj.contains(key)) out = getter(obj.at(key), path + "." + key);
}

void parse_month(const json& j, ModelConfig& model, const std::string& path) {
  require_object(j, path);
  maybe(j, "days", path, model.days_in_month, get_int);
  if (model.days_in_month < 28) fail(path + ".days", "must be >= 28");
}

void parse_arrivals(const json& j, ModelConfig& model, double& multiplier,
                    const std::string& path) {
  require_object(j, path);
  if (j.contains("bands")) {
    const json& bands = j.at("bands");
    if (!bands.is_array() || bands.empty())
      fail(path + ".bands", "expected a non-empty array");
    model.arrival_bands.clear();
    for (std::size_t i = 0; i < bands.size(); ++i) {
      const std::string bpath = path + ".bands[" + std::to_string(i) + "]";
      require_object(bands[i], bpath);
      BandCount b;
      if (!bands[i].contains("start_hour") || !bands[i].contains("end_hour") ||
          !bands[i].contains("calls_per_month"))
        fail(bpath, "needs start_hour, end_hour, calls_per_month");
      b.start_hour = get_number(bands[i].at("start_hour"), bpath + ".start_hour");
      b.end_hour = get_number(bands[i].at("end_hour"), bpath + ".end_hour");
      b.calls_per_month =
          get_number(bands[i].at("calls_per_month"), bpath + ".calls_per_month");
      if (b.calls_per_month < 0.0) fail(bpath + ".calls_per_month", "must be >= 0");
      model.arrival_bands.push_back(b);
    }
  }
  if (j.contains("multiplier")) {
    multiplier = get_number(j.at("multiplier"), path + ".multiplier");
    if (multiplier <= 0.0) fail(path + ".multiplier", "must be > 0");
  }
}

void parse_zones(const json& j, ModelConfig& model, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array");
  model.zones.clear();
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string zpath = path + "[" + std::to_string(i) + "]";
    require_object(j[i], zpath);
    Zone z;
    if (!j[i].contains("id") || !j[i].contains("name") ||
        !j[i].contains("weekday_staff") || !j[i].contains("weekend_staff"))
      fail(zpath, "needs id, name, weekday_staff, weekend_staff");
    z.id = get_int(j[i].at("id"), zpath + ".id");
    z.name = get_string(j[i].at("name"), zpath + ".name");
    z.weekday_staff = get_int(j[i].at("weekday_staff"), zpath + ".weekday_staff");
    z.weekend_staff = get_int(j[i].at("weekend_staff"), zpath + ".weekend_staff");
    z.arrival_weight = static_cast<double>(z.weekday_staff);
    maybe(j[i], "arrival_weight", zpath, z.arrival_weight, get_number);
    model.zones.push_back(z);
  }
}

void parse_patrols(const json& j, ModelConfig& model, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array");
  model.patrols.clear();
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ppath = path + "[" + std::to_string(i) + "]";
    require_object(j[i], ppath);
    NightPatrol p;
    if (!j[i].contains("name") || !j[i].contains("zone_ids"))
      fail(ppath, "needs name and zone_ids");
    p.name = get_string(j[i].at("name"), ppath + ".name");
    const json& ids = j[i].at("zone_ids");
    if (!ids.is_array() || ids.empty())
      fail(ppath + ".zone_ids", "expected a non-empty array");
    for (std::size_t k = 0; k < ids.size(); ++k)
      p.zone_ids.push_back(
          get_int(ids[k], ppath + ".zone_ids[" + std::to_string(k) + "]"));
    maybe(j[i], "units", ppath, p.units, get_int);
    model.patrols.push_back(p);
  }
}

void parse_service_times(const json& j, ServiceTimeConfig& s, const std::string& path) {
  require_object(j, path);
  maybe(j, "transfer_min", path, s.transfer_min, get_number);
  maybe(j, "transfer_max", path, s.transfer_max, get_number);
  maybe(j, "assist_min", path, s.assist_min, get_number);
  maybe(j, "assist_max", path, s.assist_max, get_number);
  maybe(j, "operator_min", path, s.operator_min, get_number);
  maybe(j, "operator_max", path, s.operator_max, get_number);
  maybe(j, "contact_min", path, s.contact_min, get_number);
  maybe(j, "contact_max", path, s.contact_max, get_number);
  maybe(j, "call_center_capacity", path, s.call_center_capacity, get_int);
}

void parse_experiment_section(const json& j, Scenario& scenario,
                              const std::string& path) {
  require_object(j, path);
  maybe(j, "replications", path, scenario.replications, get_int);
  if (scenario.replications < 2) fail(path + ".replications", "must be >= 2");
  if (j.contains("master_seed")) {
    const json& seed = j.at("master_seed");
    if (!seed.is_number_integer()) fail(path + ".master_seed", "expected an integer");
    scenario.master_seed = seed.get<std::uint64_t>();
  }
  maybe(j, "threshold_minutes", path, scenario.threshold_minutes, get_number);
  if (scenario.threshold_minutes < 0.0) fail(path + ".threshold_minutes", "must be >= 0");
  if (j.contains("multipliers")) {
    const json& ms = j.at("multipliers");
    if (!ms.is_array() || ms.empty())
      fail(path + ".multipliers", "expected a non-empty array");
    scenario.sweep_multipliers.clear();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const double m =
          get_number(ms[i], path + ".multipliers[" + std::to_string(i) + "]");
      if (m <= 0.0) fail(path + ".multipliers", "must be > 0");
      scenario.sweep_multipliers.push_back(m);
    }
  }
}

void parse_validation(const json& j, Experiment& e, const std::string& path) {
  require_object(j, path);
  if (j.contains("real_band_counts")) {
    const json& counts = j.at("real_band_counts");
    if (!counts.is_array()) fail(path + ".real_band_counts", "expected an array");
    e.real_band_counts.clear();
    for (std::size_t i = 0; i < counts.size(); ++i)
      e.real_band_counts.push_back(get_number(
          counts[i], path + ".real_band_counts[" + std::to_string(i) + "]"));
  }
}

int line_of_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

Experiment default_experiment() {
  Experiment e;
  e.scenario.model = default_model();
  e.real_band_counts = default_real_band_counts();
  return e;
}

Experiment parse_experiment(const std::string& json_text,
                            const std::string& source_name) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    fail(source_name + ":" + std::to_string(line_of_offset(json_text, err.byte)),
         err.what());
  }
  require_object(doc, source_name);

  Experiment e = default_experiment();
  ModelConfig& model = e.scenario.model;
  bool real_counts_given = false;

  for (const auto& [key, value] : doc.items()) {
    if (key == "month") {
      parse_month(value, model, "month");
    } else if (key == "arrivals") {
      parse_arrivals(value, model, e.scenario.arrival_multiplier, "arrivals");
    } else if (key == "zones") {
      parse_zones(value, model, "zones");
    } else if (key == "patrols") {
      parse_patrols(value, model, "patrols");
    } else if (key == "service_times") {
      parse_service_times(value, model.service, "service_times");
    } else if (key == "experiment") {
      parse_experiment_section(value, e.scenario, "experiment");
    } else if (key == "validation") {
      parse_validation(value, e, "validation");
      real_counts_given = true;
    } else {
      fail(key, "unknown section");
    }
  }

  e.scenario.horizon_days = static_cast<double>(model.days_in_month);

  // Custom bands without explicit real counts validate against their own
  // calibration source.
  if (!real_counts_given) {
    e.real_band_counts.clear();
    for (const BandCount& b : model.arrival_bands)
      e.real_band_counts.push_back(b.calls_per_month);
  }
  if (e.real_band_counts.size() != model.arrival_bands.size())
    fail("validation.real_band_counts", "must have one entry per arrival band");

  try {
    model.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  return e;
}

Experiment load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment(buf.str(), path);
}

std::string effective_config_json(const Experiment& e) {
  const ModelConfig& model = e.scenario.model;
  json doc;
  doc["month"]["days"] = model.days_in_month;
  doc["arrivals"]["multiplier"] = e.scenario.arrival_multiplier;
  for (const BandCount& b : model.arrival_bands)
    doc["arrivals"]["bands"].push_back({{"start_hour", b.start_hour},
                                        {"end_hour", b.end_hour},
                                        {"calls_per_month", b.calls_per_month}});
  for (const Zone& z : model.zones)
    doc["zones"].push_back({{"id", z.id},
                            {"name", z.name},
                            {"weekday_staff", z.weekday_staff},
                            {"weekend_staff", z.weekend_staff},
                            {"arrival_weight", z.arrival_weight}});
  for (const NightPatrol& p : model.patrols)
    doc["patrols"].push_back(
        {{"name", p.name}, {"zone_ids", p.zone_ids}, {"units", p.units}});
  const ServiceTimeConfig& s = model.service;
  doc["service_times"] = {{"transfer_min", s.transfer_min},
                          {"transfer_max", s.transfer_max},
                          {"assist_min", s.assist_min},
                          {"assist_max", s.assist_max},
                          {"operator_min", s.operator_min},
                          {"operator_max", s.operator_max},
                          {"contact_min", s.contact_min},
                          {"contact_max", s.contact_max},
                          {"call_center_capacity", s.call_center_capacity}};
  doc["experiment"] = {{"replications", e.scenario.replications},
                       {"master_seed", e.scenario.master_seed},
                       {"multipliers", e.scenario.sweep_multipliers},
                       {"threshold_minutes", e.scenario.threshold_minutes}};
  doc["validation"]["real_band_counts"] = e.real_band_counts;
  return doc.dump(2) + "\n";
}

}  // namespace caresim
