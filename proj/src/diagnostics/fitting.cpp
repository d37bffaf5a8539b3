#include "aol/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "aol/errors.hpp"

namespace aol {

SlopeFit fit_power_law(std::span<const double> x, std::span<const double> value) {
  return fit_power_law(x, value, {0.0, std::numeric_limits<double>::infinity()});
}

SlopeFit fit_power_law(std::span<const double> x, std::span<const double> value,
                       std::pair<double, double> window) {
  if (x.size() != value.size()) throw DegenerateFitError("fit: size mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(value[i] > 1e-14) || !(x[i] > 0.0)) continue;
    if (x[i] < window.first || x[i] > window.second) continue;
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(value[i]));
  }
  const auto n = static_cast<double>(lx.size());
  if (lx.size() < 2) throw DegenerateFitError("fit: fewer than two positive samples");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx <= 0.0) throw DegenerateFitError("fit: all abscissae coincide");
  SlopeFit f;
  f.exponent = sxy / sxx;
  f.intercept = my - f.exponent * mx;
  f.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  const auto [lo, hi] = std::minmax_element(lx.begin(), lx.end());
  f.window = {std::exp(*lo), std::exp(*hi)};
  f.points = static_cast<int>(lx.size());
  return f;
}

}  // namespace aol
