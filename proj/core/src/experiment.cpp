#include <rigidlab/experiment.hpp>

#include <rigidlab/errors.hpp>

#include <cmath>
#include <cstddef>
#include <string>

namespace rigidlab {

ExponentFit fit_exponent(const std::vector<long long>& sizes,
                         const std::vector<long long>& counts) {
  if (sizes.size() != counts.size())
    throw UsageError("exponent fit needs matching size and count lists; got " +
                     std::to_string(sizes.size()) + " sizes and " +
                     std::to_string(counts.size()) + " counts");
  const std::size_t n = sizes.size();
  if (n < 3) throw UsageError("exponent fit needs at least 3 data points; got " +
                              std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (sizes[i] <= 0)
      throw UsageError("exponent fit needs positive sizes; entry " + std::to_string(i) +
                       " is " + std::to_string(sizes[i]));
    if (counts[i] <= 0)
      throw UsageError("exponent fit needs positive counts; entry " + std::to_string(i) +
                       " is " + std::to_string(counts[i]));
  }
  ExponentFit fit;
  fit.sizes = sizes;
  fit.counts = counts;
  double xbar = 0.0;
  double ybar = 0.0;
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = std::log(static_cast<double>(sizes[i]));
    ys[i] = std::log(static_cast<double>(counts[i]));
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(n);
  ybar /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  if (sxx == 0.0)
    throw UsageError("exponent fit needs at least two distinct sizes");
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / static_cast<double>(n));
  return fit;
}

}  // namespace rigidlab
