#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "caresim/event_calendar.hpp"
#include "caresim/replication.hpp"
#include "caresim/resource.hpp"

namespace caresim {

namespace {

namespace stream_id {
constexpr std::uint64_t arrivals = 1;
constexpr std::uint64_t zone = 2;
constexpr std::uint64_t operator_handling = 3;
constexpr std::uint64_t nurse_contact = 4;
constexpr std::uint64_t transfer = 5;
constexpr std::uint64_t assist = 6;
}  // namespace stream_id

constexpr double kMinutesPerHour = 60.0;

struct Patient {
  int zone = 0;
  int nurse_resource = -1;
  SimTime t_call = 0.0;
  SimTime t_nurse_contacted = 0.0;
  SimTime t_nurse_arrived = 0.0;
  SimTime t_service_end = 0.0;
  double nurse_queue_wait_h = 0.0;
  double transfer_h = 0.0;
  bool done = false;
};

int day_type_bucket(SimTime t) {
  return classify_day_type(t) == DayType::weekend ? 1 : 0;
}

class Simulation {
 public:
  Simulation(const ModelConfig& model, double arrival_multiplier,
             double horizon_days, std::uint64_t master_seed, int rep_index)
      : model_(model),
        schedule_(model.rate_schedule().scaled(arrival_multiplier)),
        horizon_(horizon_days * 24.0),
        rep_index_(rep_index),
        arrival_stream_(master_seed, stream_id::arrivals, rep_index),
        zone_stream_(master_seed, stream_id::zone, rep_index),
        operator_stream_(master_seed, stream_id::operator_handling, rep_index),
        contact_stream_(master_seed, stream_id::nurse_contact, rep_index),
        transfer_stream_(master_seed, stream_id::transfer, rep_index),
        assist_stream_(master_seed, stream_id::assist, rep_index) {
    build_resources();
    band_counts_.assign(schedule_.bands().size(), 0);
  }

  ReplicationSummary run() {
    schedule_reviews();
    schedule_arrival_after(0.0);

    SimTime last_time = 0.0;
    while (auto event = calendar_.advance()) {
      if (event->time > horizon_) break;
      if (event->time < last_time)
        throw std::logic_error("event times went backwards");
      last_time = event->time;
      event->action();
    }
    for (auto& r : resources_) r->finish(horizon_);
    return build_summary();
  }

 private:
  void build_resources() {
    const ServiceTimeConfig& s = model_.service;
    const int cc_capacity = s.call_center_capacity;
    resources_.push_back(std::make_unique<Resource>(
        "call_center", [cc_capacity](SimTime) { return cc_capacity; },
        kDayTypeBuckets, day_type_bucket));
    for (const Zone& z : model_.zones)
      resources_.push_back(std::make_unique<Resource>(
          z.name, care_group_capacity(z.weekday_staff, z.weekend_staff),
          kDayTypeBuckets, day_type_bucket));
    for (const NightPatrol& p : model_.patrols)
      resources_.push_back(std::make_unique<Resource>(
          p.name + " patrol", patrol_capacity(p.units), kDayTypeBuckets,
          day_type_bucket));
  }

  // Capacity changes at 07:00 and 21:00 every day and at the day-type flips
  // at midnight; queued entities are granted there when capacity comes back.
  void schedule_reviews() {
    const int days = static_cast<int>(std::ceil(horizon_ / 24.0));
    for (int d = 0; d < days; ++d) {
      for (double h : {kEveningEndHour, kEveningStartHour, 24.0}) {
        const SimTime t = d * 24.0 + h;
        if (t <= horizon_)
          calendar_.schedule(t, [this] {
            for (auto& r : resources_) r->review(calendar_);
          });
      }
    }
  }

  void schedule_arrival_after(SimTime t) {
    const SimTime next = schedule_.next_arrival(t, arrival_stream_);
    if (next < horizon_)
      calendar_.schedule(next, [this] { on_arrival(); });
  }

  void on_arrival() {
    const SimTime now = calendar_.now();
    ++band_counts_[schedule_.band_index(now)];
    const int p = static_cast<int>(patients_.size());
    patients_.push_back(Patient{});
    patients_[p].zone = assign_zone(model_.zones, zone_stream_);
    patients_[p].t_call = now;
    schedule_arrival_after(now);

    Resource& cc = *resources_[kCallCenterIndex];
    if (cc.seize(calendar_, [this, p](double) { start_operator(p); }) ==
        SeizeResult::granted)
      start_operator(p);
  }

  void start_operator(int p) {
    const double handling_h =
        operator_stream_.uniform(model_.service.operator_min,
                                 model_.service.operator_max) / kMinutesPerHour;
    const double contact_h =
        contact_stream_.uniform(model_.service.contact_min,
                                model_.service.contact_max) / kMinutesPerHour;
    calendar_.schedule(calendar_.now() + handling_h + contact_h,
                       [this, p] { on_nurse_contacted(p); });
  }

  void on_nurse_contacted(int p) {
    const SimTime now = calendar_.now();
    patients_[p].t_nurse_contacted = now;
    resources_[kCallCenterIndex]->release(calendar_);

    const int r = select_resource(model_, patients_[p].zone,
                                  classify_day_type(now), classify_shift(now));
    patients_[p].nurse_resource = r;
    if (resources_[r]->seize(calendar_, [this, p](double wait) {
          start_transfer(p, wait);
        }) == SeizeResult::granted)
      start_transfer(p, 0.0);
  }

  void start_transfer(int p, double queue_wait_h) {
    patients_[p].nurse_queue_wait_h = queue_wait_h;
    const double transfer_h =
        transfer_stream_.uniform(model_.service.transfer_min,
                                 model_.service.transfer_max) / kMinutesPerHour;
    patients_[p].transfer_h = transfer_h;
    calendar_.schedule(calendar_.now() + transfer_h,
                       [this, p] { on_nurse_arrived(p); });
  }

  void on_nurse_arrived(int p) {
    Patient& pat = patients_[p];
    pat.t_nurse_arrived = calendar_.now();

    const double cc_min = (pat.t_nurse_contacted - pat.t_call) * kMinutesPerHour;
    const double transfer_min = pat.transfer_h * kMinutesPerHour;
    call_center_min_.record(cc_min);
    transfer_min_.record(transfer_min);
    total_wait_min_.record(cc_min + transfer_min);
    total_wait_samples_.push_back(cc_min + transfer_min);
    nurse_queue_wait_min_.record(pat.nurse_queue_wait_h * kMinutesPerHour);

    const double assist_h =
        assist_stream_.uniform(model_.service.assist_min,
                               model_.service.assist_max) / kMinutesPerHour;
    assist_min_.record(assist_h * kMinutesPerHour);
    calendar_.schedule(calendar_.now() + assist_h,
                       [this, p] { on_service_end(p); });
  }

  void on_service_end(int p) {
    Patient& pat = patients_[p];
    pat.t_service_end = calendar_.now();
    resources_[pat.nurse_resource]->release(calendar_);
    pat.done = true;
    ++completed_;
    if (!(pat.t_call <= pat.t_nurse_contacted &&
          pat.t_nurse_contacted <= pat.t_nurse_arrived &&
          pat.t_nurse_arrived <= pat.t_service_end))
      throw std::logic_error("patient timestamps out of order");
  }

  ReplicationSummary build_summary() const {
    ReplicationSummary s;
    s.replication_index = rep_index_;
    s.horizon_hours = horizon_;
    s.band_counts = band_counts_;
    s.arrivals = static_cast<std::int64_t>(patients_.size());
    s.completed = completed_;
    s.in_flight = s.arrivals - s.completed;
    s.call_center_min = call_center_min_;
    s.transfer_min = transfer_min_;
    s.total_wait_min = total_wait_min_;
    s.assist_min = assist_min_;
    s.nurse_queue_wait_min = nurse_queue_wait_min_;
    s.p95_total_wait_min = percentile95(total_wait_samples_);
    s.max_queue_wait_min =
        nurse_queue_wait_min_.count > 0 ? nurse_queue_wait_min_.max : 0.0;

    s.resources.reserve(resources_.size());
    for (const auto& r : resources_) {
      ResourceSummary rs;
      rs.name = r->name();
      for (int b = 0; b < kDayTypeBuckets; ++b) {
        rs.busy_hours[b] = r->busy_integral(b);
        rs.capacity_hours[b] = r->capacity_integral(b);
        rs.queue_wait_min[b] = scale_tally(r->queue_wait(b), kMinutesPerHour);
        rs.max_queue_len[b] = static_cast<std::int64_t>(r->max_queue_length(b));
      }
      rs.time_avg_queue_len = r->time_avg_queue_length(horizon_);
      s.resources.push_back(std::move(rs));
    }
    return s;
  }

  static TallyStat scale_tally(const TallyStat& t, double factor) {
    TallyStat out = t;
    out.sum *= factor;
    out.sum_squares *= factor * factor;
    if (out.count > 0) {
      out.min *= factor;
      out.max *= factor;
    }
    return out;
  }

  static double percentile95(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t idx = static_cast<std::size_t>(
        std::ceil(0.95 * static_cast<double>(xs.size()))) - 1;
    return xs[std::min(idx, xs.size() - 1)];
  }

  const ModelConfig& model_;
  RateSchedule schedule_;
  double horizon_;
  int rep_index_;
  RandomStream arrival_stream_;
  RandomStream zone_stream_;
  RandomStream operator_stream_;
  RandomStream contact_stream_;
  RandomStream transfer_stream_;
  RandomStream assist_stream_;

  EventCalendar calendar_;
  std::vector<std::unique_ptr<Resource>> resources_;
  std::vector<Patient> patients_;
  std::vector<std::int64_t> band_counts_;
  std::int64_t completed_ = 0;
  TallyStat call_center_min_, transfer_min_, total_wait_min_, assist_min_,
      nurse_queue_wait_min_;
  std::vector<double> total_wait_samples_;
};

}  // namespace

ReplicationSummary simulate_replication(const ModelConfig& model,
                                        double arrival_multiplier,
                                        double horizon_days,
                                        std::uint64_t master_seed,
                                        int replication_index) {
  Simulation sim(model, arrival_multiplier, horizon_days, master_seed,
                 replication_index);
  return sim.run();
}

}  // namespace caresim
