// Empirical exponent fitting for census growth experiments.
#pragma once

#include <vector>

namespace rigidlab {

// Ordinary least squares of log(count) against log(size).
struct ExponentFit {
  std::vector<long long> sizes;
  std::vector<long long> counts;
  double slope = 0.0;
  double intercept = 0.0;  // of the log-log line
  double residual = 0.0;   // root mean squared residual in log space
};

// Fits count ~ exp(intercept) * size^slope. Requires at least three data
// points with at least two distinct sizes; sizes and counts must be positive.
ExponentFit fit_exponent(const std::vector<long long>& sizes,
                         const std::vector<long long>& counts);

}  // namespace rigidlab
