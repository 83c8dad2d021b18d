#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "caresim/event_calendar.hpp"
#include "caresim/stats_accum.hpp"

namespace caresim {

enum class SeizeResult { granted, enqueued };

// A staffed server pool with a time-varying capacity schedule and a FIFO
// queue. Entities that cannot be served immediately wait in the queue and are
// resumed through the event calendar when a unit frees up.
//
// Capacity decreases never preempt work in progress: busy units drain down as
// they release, and no new grants happen while busy >= capacity.
//
// Statistics are split into buckets (e.g. weekday/weekend) by a caller-chosen
// classifier. Segments are integrated lazily; review() must be called at every
// point where the capacity schedule or the bucket classifier changes value,
// so that no integration segment straddles a change.
class Resource {
 public:
  using CapacityFn = std::function<int(SimTime)>;
  using BucketFn = std::function<int(SimTime)>;
  using Resume = std::function<void(double queue_wait_hours)>;

  Resource(std::string name, CapacityFn capacity, int n_buckets = 1,
           BucketFn bucket = {});

  const std::string& name() const { return name_; }
  int busy() const { return busy_; }
  std::size_t queue_length() const { return queue_.size(); }
  int effective_capacity(SimTime t) const { return capacity_(t); }

  // Grants a unit if one is free at the current clock, otherwise queues the
  // entity. `resume` is invoked through the calendar only on the queued path;
  // a granted caller just continues. Zero waits are recorded on the granted
  // path so queue-wait means cover every entity that passed through.
  SeizeResult seize(EventCalendar& cal, Resume resume);

  void release(EventCalendar& cal);

  // Re-evaluates grants and cuts an integration segment. Call at capacity
  // schedule breakpoints.
  void review(EventCalendar& cal);

  // Final flush at the end of the run.
  void finish(SimTime end_time);

  // busy unit-hours / on-duty capacity unit-hours, over intervals where
  // capacity > 0; empty if the resource was never on duty. Valid after
  // finish().
  std::optional<double> utilization() const;
  std::optional<double> utilization(int bucket) const;

  double busy_integral(int bucket) const { return busy_hours_[bucket]; }
  double capacity_integral(int bucket) const { return capacity_hours_[bucket]; }
  const TallyStat& queue_wait(int bucket) const { return queue_wait_[bucket]; }
  std::size_t max_queue_length(int bucket) const { return max_queue_len_[bucket]; }
  double time_avg_queue_length(SimTime horizon) const {
    return queue_len_.time_average(horizon);
  }

  // Run-wide audit counters.
  int max_busy_observed() const { return max_busy_observed_; }
  int max_capacity_observed() const { return max_capacity_observed_; }

 private:
  void integrate(SimTime t);
  void try_grant(EventCalendar& cal);
  int bucket_at(SimTime t) const { return bucket_ ? bucket_(t) : 0; }

  struct Waiting {
    Resume resume;
    SimTime enqueue_time;
    std::uint64_t enter_seq;
  };

  std::string name_;
  CapacityFn capacity_;
  BucketFn bucket_;
  int busy_ = 0;
  std::deque<Waiting> queue_;
  std::uint64_t next_enter_seq_ = 0;
  std::uint64_t last_granted_seq_ = 0;

  SimTime last_update_ = 0.0;
  std::vector<double> busy_hours_;
  std::vector<double> capacity_hours_;
  std::vector<TallyStat> queue_wait_;
  std::vector<std::size_t> max_queue_len_;
  TimeWeightedStat queue_len_;
  int max_busy_observed_ = 0;
  int max_capacity_observed_ = 0;
};

}  // namespace caresim
