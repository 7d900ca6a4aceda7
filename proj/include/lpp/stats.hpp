#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

namespace lpp {

struct SampleSummary {
  double mean = 0.0;
  /// Sample standard deviation (denominator count - 1); NaN below 2 samples.
  double sd = std::numeric_limits<double>::quiet_NaN();
  /// sd / sqrt(count).
  double stderr = std::numeric_limits<double>::quiet_NaN();
};

/// Two-pass mean and spread, summed in index order so the result does not
/// depend on how the samples were produced.
inline SampleSummary summarize_samples(std::span<const double> xs) {
  SampleSummary s;
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double v : xs) sum += v;
  const double n = static_cast<double>(xs.size());
  s.mean = sum / n;
  if (xs.size() < 2) return s;
  double ss = 0.0;
  for (double v : xs) ss += (v - s.mean) * (v - s.mean);
  s.sd = std::sqrt(ss / (n - 1.0));
  s.stderr = s.sd / std::sqrt(n);
  return s;
}

/// Standard error of a frequency phat over `count` Bernoulli trials, using the
/// same (count - 1) convention as summarize_samples.
inline double bernoulli_stderr(double phat, std::int64_t count) {
  if (count < 2) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(count);
  return std::sqrt(phat * (1.0 - phat) * n / (n - 1.0) / n);
}

}  // namespace lpp
