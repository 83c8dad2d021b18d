#pragma once

#include <span>
#include <string>
#include <vector>

namespace caresim {

struct ConfidenceInterval {
  double mean = 0.0;
  double half_width = 0.0;
  double level = 0.95;
  int n = 0;

  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
  bool contains(double x) const { return lower() <= x && x <= upper(); }
};

// Two-sided Student-t critical value t_{dof, p}. p is the CDF probability
// (e.g. 0.975 for a 95% interval).
double student_t_quantile(double p, int dof);

// Regularized incomplete beta function I_x(a,b), exposed for testing.
double regularized_incomplete_beta(double a, double b, double x);

// Student-t interval on the mean. Throws std::invalid_argument for fewer than
// two samples.
ConfidenceInterval confidence_interval(std::span<const double> samples,
                                       double level = 0.95);

struct BandValidation {
  std::string label;
  double real = 0.0;
  double mean = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};

// One row per band plus a final "total" row: builds the CI over per-run
// counts and checks that the real count lies inside it.
// counts_per_run[r][b] = count of band b in run r; labels.size() must match
// the band dimension.
std::vector<BandValidation> validate_counts(
    const std::vector<std::string>& labels, const std::vector<double>& real_counts,
    const std::vector<std::vector<double>>& counts_per_run, double level = 0.95);

}  // namespace caresim
