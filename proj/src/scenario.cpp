#include "caresim/scenario.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>

namespace caresim {

namespace {

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

const char* day_type_name(int bucket) { return bucket == 0 ? "weekday" : "weekend"; }

}  // namespace

std::string band_label(double start_hour, double end_hour) {
  auto hhmm = [](double h) {
    const int total = static_cast<int>(std::lround(h * 60.0)) % (24 * 60);
    return fmt("%02d:%02d", total / 60, total % 60);
  };
  return hhmm(start_hour) + "-" + hhmm(end_hour);
}

SweepReport run_sweep(const Scenario& base, const std::vector<double>& multipliers,
                      bool serial_runner) {
  if (multipliers.empty())
    throw std::invalid_argument("run_sweep: empty multiplier list");
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    if (multipliers[i] <= 0.0)
      throw std::invalid_argument("run_sweep: multipliers must be positive");
    if (i > 0 && multipliers[i] < multipliers[i - 1])
      throw std::invalid_argument("run_sweep: multipliers must be ascending");
  }

  SweepReport report;
  report.threshold_minutes = base.threshold_minutes;
  for (double m : multipliers) {
    Scenario point = base;
    point.arrival_multiplier = m;
    const auto reps =
        serial_runner ? run_replications_serial(point) : run_replications(point);

    std::vector<double> cc, tr, tot, p95;
    cc.reserve(reps.size());
    for (const auto& r : reps) {
      cc.push_back(r.call_center_min.mean());
      tr.push_back(r.transfer_min.mean());
      tot.push_back(r.total_wait_min.mean());
      p95.push_back(r.p95_total_wait_min);
    }
    SweepRow row{m, mean_of(cc), mean_of(tr), mean_of(tot), mean_of(p95)};
    if (!report.knee_multiplier && row.total_wait_min > report.threshold_minutes)
      report.knee_multiplier = m;
    report.rows.push_back(row);
  }
  return report;
}

RunSummary summarize_run(const Scenario& scenario,
                         const std::vector<ReplicationSummary>& reps) {
  RunSummary s;
  s.replications = static_cast<int>(reps.size());
  s.multiplier = scenario.arrival_multiplier;
  s.horizon_days = scenario.horizon_days;

  const auto& bands = scenario.model.arrival_bands;
  std::vector<double> samples(reps.size());
  for (std::size_t b = 0; b < bands.size(); ++b) {
    s.band_labels.push_back(band_label(bands[b].start_hour, bands[b].end_hour));
    for (std::size_t r = 0; r < reps.size(); ++r)
      samples[r] = static_cast<double>(reps[r].band_counts[b]);
    s.band_count_cis.push_back(confidence_interval(samples));
  }
  for (std::size_t r = 0; r < reps.size(); ++r)
    samples[r] = static_cast<double>(reps[r].arrivals);
  s.total_count_ci = confidence_interval(samples);

  std::vector<double> completed, in_flight, cc, tr, tot, p95, maxq;
  for (const auto& r : reps) {
    completed.push_back(static_cast<double>(r.completed));
    in_flight.push_back(static_cast<double>(r.in_flight));
    cc.push_back(r.call_center_min.mean());
    tr.push_back(r.transfer_min.mean());
    tot.push_back(r.total_wait_min.mean());
    p95.push_back(r.p95_total_wait_min);
    maxq.push_back(r.max_queue_wait_min);
  }
  s.completed_mean = mean_of(completed);
  s.in_flight_mean = mean_of(in_flight);
  s.call_center_min = mean_of(cc);
  s.transfer_min = mean_of(tr);
  s.total_wait_min = mean_of(tot);
  s.p95_total_wait_min = mean_of(p95);
  s.max_queue_wait_min = mean_of(maxq);
  return s;
}

UtilizationReport utilization_report(const Scenario& scenario,
                                     const std::vector<ReplicationSummary>& reps) {
  UtilizationReport report;
  const std::size_t n_zones = scenario.model.zones.size();
  const std::size_t n_patrols = scenario.model.patrols.size();

  auto mean_utilization = [&](std::size_t res, int bucket,
                              bool combined) -> std::optional<double> {
    double sum = 0.0;
    int defined = 0;
    for (const auto& rep : reps) {
      const ResourceSummary& rs = rep.resources[res];
      double busy = 0.0, cap = 0.0;
      if (combined) {
        for (int b = 0; b < kDayTypeBuckets; ++b) {
          busy += rs.busy_hours[b];
          cap += rs.capacity_hours[b];
        }
      } else {
        busy = rs.busy_hours[bucket];
        cap = rs.capacity_hours[bucket];
      }
      if (cap > 0.0) {
        sum += busy / cap;
        ++defined;
      }
    }
    if (defined == 0) return std::nullopt;
    return sum / defined;
  };

  for (std::size_t z = 0; z < n_zones; ++z) {
    const std::size_t res = 1 + z;
    for (int b = 0; b < kDayTypeBuckets; ++b)
      report.rows.push_back(UtilizationRow{scenario.model.zones[z].name,
                                           day_type_name(b),
                                           mean_utilization(res, b, false)});
  }
  for (std::size_t p = 0; p < n_patrols; ++p) {
    const std::size_t res = 1 + n_zones + p;
    report.rows.push_back(UtilizationRow{scenario.model.patrols[p].name + " patrol",
                                         "all", mean_utilization(res, 0, true)});
  }
  return report;
}

QueueReport queue_report(const Scenario& scenario,
                         const std::vector<ReplicationSummary>& reps) {
  QueueReport report;
  if (reps.empty()) return report;
  const std::size_t n_resources = reps.front().resources.size();
  (void)scenario;

  for (std::size_t res = 0; res < n_resources; ++res) {
    for (int b = 0; b < kDayTypeBuckets; ++b) {
      TallyStat pooled;
      double max_wait_sum = 0.0, max_len_sum = 0.0;
      for (const auto& rep : reps) {
        const ResourceSummary& rs = rep.resources[res];
        pooled.merge(rs.queue_wait_min[b]);
        max_wait_sum += rs.queue_wait_min[b].count > 0 ? rs.queue_wait_min[b].max : 0.0;
        max_len_sum += static_cast<double>(rs.max_queue_len[b]);
      }
      QueueRow row;
      row.resource = reps.front().resources[res].name;
      row.day_type = day_type_name(b);
      row.mean_queue_wait_min = pooled.mean();
      row.max_queue_wait_min = max_wait_sum / static_cast<double>(reps.size());
      row.max_queue_len = max_len_sum / static_cast<double>(reps.size());
      report.rows.push_back(row);
    }
  }
  return report;
}

std::vector<BandValidation> validate_against_real(
    const Scenario& scenario, const std::vector<double>& real_band_counts,
    const std::vector<ReplicationSummary>& reps, double level) {
  const auto& bands = scenario.model.arrival_bands;
  std::vector<std::string> labels;
  for (const auto& b : bands) labels.push_back(band_label(b.start_hour, b.end_hour));
  std::vector<std::vector<double>> counts(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    counts[r].reserve(bands.size());
    for (std::int64_t c : reps[r].band_counts)
      counts[r].push_back(static_cast<double>(c));
  }
  return validate_counts(labels, real_band_counts, counts, level);
}

std::string to_csv(const SweepReport& report) {
  std::string out =
      "multiplier,call_center_min,transfer_min,total_wait_min,p95_total_wait_min\n";
  for (const SweepRow& r : report.rows)
    out += fmt("%.4f,%.6f,%.6f,%.6f,%.6f\n", r.multiplier, r.call_center_min,
               r.transfer_min, r.total_wait_min, r.p95_total_wait_min);
  return out;
}

std::string to_csv(const UtilizationReport& report) {
  std::string out = "resource,day_type,utilization\n";
  for (const UtilizationRow& r : report.rows) {
    out += r.resource + "," + r.day_type + ",";
    out += r.utilization ? fmt("%.6f", *r.utilization) : std::string();
    out += "\n";
  }
  return out;
}

std::string to_csv(const QueueReport& report) {
  std::string out = "resource,day_type,mean_queue_wait_min,max_queue_wait_min,max_queue_len\n";
  for (const QueueRow& r : report.rows)
    out += r.resource + "," + r.day_type +
           fmt(",%.6f,%.6f,%.6f\n", r.mean_queue_wait_min, r.max_queue_wait_min,
               r.max_queue_len);
  return out;
}

std::string to_csv(const RunSummary& s) {
  std::string out = "metric,value\n";
  out += fmt("replications,%d\n", s.replications);
  out += fmt("multiplier,%.4f\n", s.multiplier);
  out += fmt("horizon_days,%.4f\n", s.horizon_days);
  for (std::size_t b = 0; b < s.band_labels.size(); ++b) {
    const auto& ci = s.band_count_cis[b];
    out += "arrivals_" + s.band_labels[b] + fmt(",%.6f\n", ci.mean);
    out += "arrivals_" + s.band_labels[b] + fmt("_ci_lower,%.6f\n", ci.lower());
    out += "arrivals_" + s.band_labels[b] + fmt("_ci_upper,%.6f\n", ci.upper());
  }
  out += fmt("arrivals_total,%.6f\n", s.total_count_ci.mean);
  out += fmt("arrivals_total_ci_lower,%.6f\n", s.total_count_ci.lower());
  out += fmt("arrivals_total_ci_upper,%.6f\n", s.total_count_ci.upper());
  out += fmt("completed_mean,%.6f\n", s.completed_mean);
  out += fmt("in_flight_mean,%.6f\n", s.in_flight_mean);
  out += fmt("call_center_min,%.6f\n", s.call_center_min);
  out += fmt("transfer_min,%.6f\n", s.transfer_min);
  out += fmt("total_wait_min,%.6f\n", s.total_wait_min);
  out += fmt("p95_total_wait_min,%.6f\n", s.p95_total_wait_min);
  out += fmt("max_queue_wait_min,%.6f\n", s.max_queue_wait_min);
  return out;
}

std::string to_csv(const std::vector<BandValidation>& rows) {
  std::string out = "band,real,mean,lower,upper,pass\n";
  for (const BandValidation& r : rows)
    out += r.label + fmt(",%.1f,%.6f,%.6f,%.6f,%s\n", r.real, r.mean, r.lower,
                         r.upper, r.pass ? "true" : "false");
  return out;
}

std::string to_text(const SweepReport& report) {
  std::string out;
  out += fmt("%-12s %16s %14s %16s %20s\n", "multiplier", "call_center_min",
             "transfer_min", "total_wait_min", "p95_total_wait_min");
  for (const SweepRow& r : report.rows)
    out += fmt("%-12.4f %16.2f %14.2f %16.2f %20.2f\n", r.multiplier,
               r.call_center_min, r.transfer_min, r.total_wait_min,
               r.p95_total_wait_min);
  if (report.knee_multiplier)
    out += fmt("threshold %.1f min first exceeded at multiplier %.4f\n",
               report.threshold_minutes, *report.knee_multiplier);
  else
    out += fmt("threshold %.1f min never exceeded\n", report.threshold_minutes);
  return out;
}

std::string to_text(const UtilizationReport& report) {
  std::string out = fmt("%-24s %-9s %12s\n", "resource", "day_type", "utilization");
  for (const UtilizationRow& r : report.rows) {
    if (r.utilization)
      out += fmt("%-24s %-9s %11.0f%%\n", r.resource.c_str(), r.day_type.c_str(),
                 *r.utilization * 100.0);
    else
      out += fmt("%-24s %-9s %12s\n", r.resource.c_str(), r.day_type.c_str(), "-");
  }
  return out;
}

std::string to_text(const QueueReport& report) {
  std::string out = fmt("%-24s %-9s %10s %10s %10s\n", "resource", "day_type",
                        "mean_wait", "max_wait", "max_len");
  for (const QueueRow& r : report.rows)
    out += fmt("%-24s %-9s %10.2f %10.2f %10.2f\n", r.resource.c_str(),
               r.day_type.c_str(), r.mean_queue_wait_min, r.max_queue_wait_min,
               r.max_queue_len);
  return out;
}

std::string to_text(const RunSummary& s) {
  std::string out;
  out += fmt("replications %d, multiplier %.4f, horizon %.1f days\n",
             s.replications, s.multiplier, s.horizon_days);
  out += fmt("%-14s %10s %10s %10s\n", "band", "mean", "lower", "upper");
  for (std::size_t b = 0; b < s.band_labels.size(); ++b) {
    const auto& ci = s.band_count_cis[b];
    out += fmt("%-14s %10.1f %10.1f %10.1f\n", s.band_labels[b].c_str(), ci.mean,
               ci.lower(), ci.upper());
  }
  out += fmt("%-14s %10.1f %10.1f %10.1f\n", "total", s.total_count_ci.mean,
             s.total_count_ci.lower(), s.total_count_ci.upper());
  out += fmt("completed mean %.1f, in flight at horizon %.1f\n", s.completed_mean,
             s.in_flight_mean);
  out += fmt("call center %.2f min, transfer %.2f min, total wait %.2f min "
             "(p95 %.2f, worst nurse-queue wait %.2f)\n",
             s.call_center_min, s.transfer_min, s.total_wait_min,
             s.p95_total_wait_min, s.max_queue_wait_min);
  return out;
}

std::string to_text(const std::vector<BandValidation>& rows) {
  std::string out = fmt("%-14s %10s %10s %10s %10s  %s\n", "band", "real", "mean",
                        "lower", "upper", "pass");
  for (const BandValidation& r : rows)
    out += fmt("%-14s %10.1f %10.1f %10.1f %10.1f  %s\n", r.label.c_str(), r.real,
               r.mean, r.lower, r.upper, r.pass ? "yes" : "NO");
  return out;
}

}  // namespace caresim
