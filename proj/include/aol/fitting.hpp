#pragma once

#include <span>
#include <utility>

namespace aol {

/// Least-squares slope of log(value) against log(x).
struct SlopeFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::pair<double, double> window{0.0, 0.0};
  int points = 0;
};

/// Samples with value <= 1e-14 (or x outside `window` when given) are skipped.
/// Throws DegenerateFitError with fewer than two usable samples.
SlopeFit fit_power_law(std::span<const double> x, std::span<const double> value);
SlopeFit fit_power_law(std::span<const double> x, std::span<const double> value,
                       std::pair<double, double> window);

}  // namespace aol
