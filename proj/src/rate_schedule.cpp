#include "caresim/rate_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace caresim {

namespace {

double hour_of_day(SimTime t) {
  double h = std::fmod(t, 24.0);
  if (h < 0.0) h += 24.0;
  return h;
}

bool in_band(const RateBand& b, double h) {
  if (b.start_hour < b.end_hour) return h >= b.start_hour && h < b.end_hour;
  return h >= b.start_hour || h < b.end_hour;  // wraps midnight
}

void check_partition(const std::vector<RateBand>& bands) {
  if (bands.empty()) throw std::invalid_argument("rate schedule: no bands");
  double total = 0.0;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const RateBand& b = bands[i];
    if (b.rate_per_hour < 0.0)
      throw std::invalid_argument("rate schedule: negative rate");
    if (b.width_hours() <= 0.0 || b.width_hours() > 24.0)
      throw std::invalid_argument("rate schedule: bad band width");
    const RateBand& next = bands[(i + 1) % bands.size()];
    if (std::abs(std::fmod(b.end_hour, 24.0) - std::fmod(next.start_hour, 24.0)) > 1e-9)
      throw std::invalid_argument("rate schedule: bands do not partition [0,24)");
    total += b.width_hours();
  }
  if (std::abs(total - 24.0) > 1e-9)
    throw std::invalid_argument("rate schedule: bands do not cover 24 hours");
}

}  // namespace

RateSchedule::RateSchedule(std::vector<RateBand> bands, double multiplier)
    : bands_(std::move(bands)), multiplier_(multiplier) {
  if (multiplier_ <= 0.0)
    throw std::invalid_argument("rate schedule: multiplier must be positive");
  check_partition(bands_);
}

RateSchedule RateSchedule::from_monthly_counts(
    const std::vector<BandCount>& counts, int days_in_month) {
  if (days_in_month < 28)
    throw std::invalid_argument("rate schedule: days_in_month must be >= 28");
  std::vector<RateBand> bands;
  bands.reserve(counts.size());
  for (const BandCount& c : counts) {
    if (c.calls_per_month < 0.0)
      throw std::invalid_argument("rate schedule: negative monthly count");
    RateBand b{c.start_hour, c.end_hour, 0.0};
    b.rate_per_hour = c.calls_per_month / (days_in_month * b.width_hours());
    bands.push_back(b);
  }
  return RateSchedule(std::move(bands));
}

double RateSchedule::rate_at(SimTime t) const {
  return bands_[band_index(t)].rate_per_hour * multiplier_;
}

int RateSchedule::band_index(SimTime t) const {
  const double h = hour_of_day(t);
  for (std::size_t i = 0; i < bands_.size(); ++i)
    if (in_band(bands_[i], h)) return static_cast<int>(i);
  // Unreachable for a valid partition; fmod noise lands in some band.
  return 0;
}

double RateSchedule::max_effective_rate() const {
  double m = 0.0;
  for (const RateBand& b : bands_) m = std::max(m, b.rate_per_hour);
  return m * multiplier_;
}

RateSchedule RateSchedule::scaled(double m) const {
  if (m <= 0.0) throw std::invalid_argument("rate schedule: multiplier must be positive");
  return RateSchedule(bands_, multiplier_ * m);
}

SimTime RateSchedule::next_arrival(SimTime now, RandomStream& stream) const {
  const double lambda_max = max_effective_rate();
  if (lambda_max <= 0.0) return std::numeric_limits<double>::infinity();
  SimTime t = now;
  for (;;) {
    t += stream.exponential(lambda_max);
    if (stream.uniform01() * lambda_max < rate_at(t)) return t;
  }
}

double RateSchedule::expected_count(double days) const {
  double per_day = 0.0;
  for (const RateBand& b : bands_) per_day += b.rate_per_hour * b.width_hours();
  return per_day * multiplier_ * days;
}

}  // namespace caresim
