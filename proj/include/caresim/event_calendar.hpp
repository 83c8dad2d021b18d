#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "caresim/stats_accum.hpp"

namespace caresim {

// Future-event list. Events are ordered by (time, insertion sequence), so
// simultaneous events fire in the order they were scheduled.
class EventCalendar {
 public:
  struct Event {
    SimTime time = 0.0;
    std::uint64_t seq = 0;
    std::function<void()> action;
  };

  SimTime now() const { return now_; }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  void schedule(SimTime time, std::function<void()> action) {
    if (time < now_) throw std::logic_error("EventCalendar: scheduling into the past");
    heap_.push_back(Event{time, next_seq_++, std::move(action)});
    std::push_heap(heap_.begin(), heap_.end(), later);
  }

  std::optional<SimTime> next_time() const {
    if (heap_.empty()) return std::nullopt;
    return heap_.front().time;
  }

  // Extracts the earliest event and advances the clock to it. An empty
  // calendar means the run is over, not an error.
  std::optional<Event> advance() {
    if (heap_.empty()) return std::nullopt;
    std::pop_heap(heap_.begin(), heap_.end(), later);
    Event e = std::move(heap_.back());
    heap_.pop_back();
    now_ = e.time;
    return e;
  }

 private:
  // Min-heap on (time, seq).
  static bool later(const Event& a, const Event& b) {
    return a.time > b.time || (a.time == b.time && a.seq > b.seq);
  }

  SimTime now_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::vector<Event> heap_;
};

}  // namespace caresim
