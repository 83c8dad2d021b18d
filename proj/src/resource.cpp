#include "caresim/resource.hpp"

#include <stdexcept>
#include <utility>

namespace caresim {

Resource::Resource(std::string name, CapacityFn capacity, int n_buckets,
                   BucketFn bucket)
    : name_(std::move(name)),
      capacity_(std::move(capacity)),
      bucket_(std::move(bucket)),
      busy_hours_(n_buckets, 0.0),
      capacity_hours_(n_buckets, 0.0),
      queue_wait_(n_buckets),
      max_queue_len_(n_buckets, 0) {}

void Resource::integrate(SimTime t) {
  const double dt = t - last_update_;
  if (dt > 0.0) {
    const int cap = capacity_(last_update_);
    if (cap > 0) {
      const int bucket = bucket_at(last_update_);
      capacity_hours_[bucket] += static_cast<double>(cap) * dt;
      // During a no-preemption drain busy can exceed the scheduled capacity;
      // only on-duty units count toward the busy integral.
      busy_hours_[bucket] += static_cast<double>(std::min(busy_, cap)) * dt;
    }
    queue_len_.record(static_cast<double>(queue_.size()), t);
    last_update_ = t;
  }
  const int cap_now = capacity_(t);
  max_capacity_observed_ = std::max(max_capacity_observed_, cap_now);
}

SeizeResult Resource::seize(EventCalendar& cal, Resume resume) {
  const SimTime now = cal.now();
  integrate(now);
  const int cap = capacity_(now);
  if (busy_ < cap) {
    ++busy_;
    max_busy_observed_ = std::max(max_busy_observed_, busy_);
    queue_wait_[bucket_at(now)].record(0.0);
    return SeizeResult::granted;
  }
  queue_.push_back(Waiting{std::move(resume), now, next_enter_seq_++});
  queue_len_.record(static_cast<double>(queue_.size()), now);
  const int bucket = bucket_at(now);
  max_queue_len_[bucket] = std::max(max_queue_len_[bucket], queue_.size());
  return SeizeResult::enqueued;
}

void Resource::release(EventCalendar& cal) {
  if (busy_ <= 0) throw std::logic_error("Resource '" + name_ + "': release while idle");
  integrate(cal.now());
  --busy_;
  try_grant(cal);
}

void Resource::try_grant(EventCalendar& cal) {
  const SimTime now = cal.now();
  const int cap = capacity_(now);
  while (busy_ < cap && !queue_.empty()) {
    Waiting head = std::move(queue_.front());
    queue_.pop_front();
    if (head.enter_seq < last_granted_seq_)
      throw std::logic_error("Resource '" + name_ + "': FIFO order violated");
    last_granted_seq_ = head.enter_seq;
    ++busy_;
    max_busy_observed_ = std::max(max_busy_observed_, busy_);
    queue_len_.record(static_cast<double>(queue_.size()), now);
    const double wait = now - head.enqueue_time;
    queue_wait_[bucket_at(head.enqueue_time)].record(wait);
    cal.schedule(now, [resume = std::move(head.resume), wait] { resume(wait); });
  }
}

void Resource::review(EventCalendar& cal) {
  integrate(cal.now());
  try_grant(cal);
}

void Resource::finish(SimTime end_time) {
  integrate(end_time);
  queue_len_.finish(end_time);
}

std::optional<double> Resource::utilization() const {
  double busy = 0.0, cap = 0.0;
  for (std::size_t i = 0; i < busy_hours_.size(); ++i) {
    busy += busy_hours_[i];
    cap += capacity_hours_[i];
  }
  if (cap <= 0.0) return std::nullopt;
  return busy / cap;
}

std::optional<double> Resource::utilization(int bucket) const {
  if (capacity_hours_[bucket] <= 0.0) return std::nullopt;
  return busy_hours_[bucket] / capacity_hours_[bucket];
}

}  // namespace caresim
