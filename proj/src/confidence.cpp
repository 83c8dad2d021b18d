#include "caresim/confidence.hpp"

#include <cmath>
#include <stdexcept>

namespace caresim {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log(1.0 - x);
  const double front = std::exp(ln_front);
  // Use the symmetry relation where the continued fraction converges fastest.
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_quantile(double p, int dof) {
  if (dof < 1) throw std::invalid_argument("student_t_quantile: dof must be >= 1");
  if (p <= 0.0 || p >= 1.0)
    throw std::invalid_argument("student_t_quantile: p must be in (0,1)");
  if (p == 0.5) return 0.0;
  const bool upper = p > 0.5;
  const double tail = upper ? 1.0 - p : p;  // one-sided tail mass

  // For t >= 0: P(T > t) = I_{v/(v+t^2)}(v/2, 1/2) / 2. Solve by bisection;
  // the function is monotone and well behaved.
  const double v = static_cast<double>(dof);
  auto tail_prob = [&](double t) {
    return 0.5 * regularized_incomplete_beta(v / 2.0, 0.5, v / (v + t * t));
  };
  double lo = 0.0, hi = 1.0;
  while (tail_prob(hi) > tail && hi < 1e12) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (tail_prob(mid) > tail)
      lo = mid;
    else
      hi = mid;
  }
  const double t = 0.5 * (lo + hi);
  return upper ? t : -t;
}

ConfidenceInterval confidence_interval(std::span<const double> samples,
                                       double level) {
  const int n = static_cast<int>(samples.size());
  if (n < 2)
    throw std::invalid_argument("confidence_interval: need at least 2 samples");
  if (level <= 0.0 || level >= 1.0)
    throw std::invalid_argument("confidence_interval: level must be in (0,1)");
  double sum = 0.0;
  for (double x : samples) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1));
  const double t = student_t_quantile(0.5 + level / 2.0, n - 1);
  return ConfidenceInterval{mean, t * sd / std::sqrt(static_cast<double>(n)),
                            level, n};
}

std::vector<BandValidation> validate_counts(
    const std::vector<std::string>& labels, const std::vector<double>& real_counts,
    const std::vector<std::vector<double>>& counts_per_run, double level) {
  const std::size_t n_bands = labels.size();
  if (real_counts.size() != n_bands)
    throw std::invalid_argument("validate_counts: band mismatch");
  for (const auto& run : counts_per_run)
    if (run.size() != n_bands)
      throw std::invalid_argument("validate_counts: band mismatch");

  std::vector<BandValidation> rows;
  rows.reserve(n_bands + 1);
  std::vector<double> samples(counts_per_run.size());
  double real_total = 0.0;
  for (std::size_t b = 0; b < n_bands; ++b) {
    for (std::size_t r = 0; r < counts_per_run.size(); ++r)
      samples[r] = counts_per_run[r][b];
    const ConfidenceInterval ci = confidence_interval(samples, level);
    rows.push_back(BandValidation{labels[b], real_counts[b], ci.mean, ci.lower(),
                                  ci.upper(), ci.contains(real_counts[b])});
    real_total += real_counts[b];
  }
  for (std::size_t r = 0; r < counts_per_run.size(); ++r) {
    samples[r] = 0.0;
    for (std::size_t b = 0; b < n_bands; ++b) samples[r] += counts_per_run[r][b];
  }
  const ConfidenceInterval ci = confidence_interval(samples, level);
  rows.push_back(BandValidation{"total", real_total, ci.mean, ci.lower(),
                                ci.upper(), ci.contains(real_total)});
  return rows;
}

}  // namespace caresim
