#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace caresim {

using SimTime = double;  // hours since simulation start

// Observation accumulator: count, mean, min, max.
struct TallyStat {
  std::int64_t count = 0;
  double sum = 0.0;
  double sum_squares = 0.0;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  void record(double x) {
    ++count;
    sum += x;
    sum_squares += x * x;
    min = std::min(min, x);
    max = std::max(max, x);
  }

  double mean() const { return count > 0 ? sum / static_cast<double>(count) : 0.0; }

  void merge(const TallyStat& other) {
    count += other.count;
    sum += other.sum;
    sum_squares += other.sum_squares;
    min = std::min(min, other.min);
    max = std::max(max, other.max);
  }
};

// Time-weighted accumulator for piecewise-constant signals (queue length,
// busy servers). time_average over [0,T] is valid only after finish(T).
struct TimeWeightedStat {
  double integral = 0.0;
  double last_value = 0.0;
  SimTime last_update = 0.0;

  void record(double value, SimTime t) {
    if (t < last_update) throw std::logic_error("time-weighted stat: time regression");
    integral += last_value * (t - last_update);
    last_value = value;
    last_update = t;
  }

  void finish(SimTime t) { record(last_value, t); }

  double time_average(SimTime horizon) const {
    return horizon > 0.0 ? integral / horizon : 0.0;
  }
};

}  // namespace caresim
