#pragma once

#include <limits>
#include <vector>

#include "caresim/rng.hpp"
#include "caresim/stats_accum.hpp"

namespace caresim {

// One band of the daily arrival pattern. end_hour may be numerically smaller
// than start_hour for a band that wraps midnight (e.g. 21:00-07:00).
struct RateBand {
  double start_hour = 0.0;
  double end_hour = 0.0;
  double rate_per_hour = 0.0;

  double width_hours() const {
    double w = end_hour - start_hour;
    return w > 0.0 ? w : w + 24.0;
  }
};

struct BandCount {
  double start_hour = 0.0;
  double end_hour = 0.0;
  double calls_per_month = 0.0;
};

// Piecewise-constant daily arrival-rate function with a global multiplier.
// Bands must partition [0,24) exactly.
class RateSchedule {
 public:
  RateSchedule(std::vector<RateBand> bands, double multiplier = 1.0);

  // Band rate = monthly count / (days * band width).
  static RateSchedule from_monthly_counts(const std::vector<BandCount>& counts,
                                          int days_in_month);

  double rate_at(SimTime t) const;  // effective rate, multiplier applied
  double max_effective_rate() const;
  double multiplier() const { return multiplier_; }
  const std::vector<RateBand>& bands() const { return bands_; }
  int band_index(SimTime t) const;

  // Returns a copy whose multiplier is scaled by m (multiplicative
  // composition). Throws for m <= 0.
  RateSchedule scaled(double m) const;

  // Next event time of the nonstationary Poisson process with this intensity,
  // strictly after `now`, generated by thinning against the maximum effective
  // band rate. Returns +infinity when every band rate is zero.
  SimTime next_arrival(SimTime now, RandomStream& stream) const;

  // Expected arrivals over a whole number of days.
  double expected_count(double days) const;

 private:
  std::vector<RateBand> bands_;
  double multiplier_ = 1.0;
};

}  // namespace caresim
