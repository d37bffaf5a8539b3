#include "aol/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aol/errors.hpp"
#include "aol/parallel.hpp"
#include "aol/spectral_ops.hpp"

namespace aol {
namespace {

void validate_radii(std::span<const double> radii) {
  if (radii.empty()) throw ConfigError("no radii given");
  for (double r : radii) {
    if (!(r > 0.0 && r <= std::numbers::pi)) {
      throw ConfigError("radius " + std::to_string(r) + " outside (0, pi]");
    }
  }
}

// |w(x + xi) - w(x)| with the unshifted samples computed once.
class IncrementSampler {
 public:
  explicit IncrementSampler(const SpectralVectorField& w) : w_(w), base_(to_real(w)) {}

  RealArray magnitude(const Eigen::Vector3d& xi) const {
    const RealVectorField shifted = to_real(shift(w_, xi));
    RealArray m = (shifted.c[0] - base_.c[0]).square();
    for (int i = 1; i < 3; ++i) m += (shifted.c[i] - base_.c[i]).square();
    return m.sqrt();
  }

 private:
  const SpectralVectorField& w_;
  RealVectorField base_;
};

// Direction-weighted average over `directions` of f(r * d), one task per radius.
template <typename F>
std::vector<double> radial_average(std::span<const double> radii, const DirectionSet& directions,
                                   F&& f) {
  std::vector<double> out(radii.size(), 0.0);
  parallel_for(radii.size(), [&](std::size_t i) {
    double acc = 0.0;
    for (std::size_t d = 0; d < directions.size(); ++d) {
      acc += directions.weights[d] * f(radii[i] * directions.directions[d]);
    }
    out[i] = acc;
  });
  return out;
}

double mean_of(std::span<const double> v, std::size_t first, std::size_t last) {
  double acc = 0.0;
  for (std::size_t i = first; i < last; ++i) acc += v[i];
  return acc / static_cast<double>(last - first);
}

}  // namespace

RealVectorField increment(const SpectralVectorField& w, const Eigen::Vector3d& xi) {
  RealVectorField out = to_real(shift(w, xi));
  const RealVectorField base = to_real(w);
  for (int i = 0; i < 3; ++i) out.c[i] -= base.c[i];
  return out;
}

StructureFunctionTable structure_function(const SpectralVectorField& w, int p,
                                          std::span<const double> radii,
                                          const DirectionSet& directions) {
  if (p < 1 || p > 3) throw ConfigError("structure function order must be 1, 2 or 3");
  validate_radii(radii);
  StructureFunctionTable table;
  table.p = p;
  table.radii.assign(radii.begin(), radii.end());
  table.directions = directions;
  const IncrementSampler sampler(w);
  table.values = radial_average(radii, directions, [&](const Eigen::Vector3d& xi) {
    return sampler.magnitude(xi).pow(p).mean();
  });
  return table;
}

std::vector<double> geometric_radii(double lo, double hi, int count) {
  if (!(lo > 0.0 && lo < hi) || count < 2) throw ConfigError("invalid radius range");
  std::vector<double> r;
  for (int i = 0; i < count; ++i) {
    r.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  }
  return r;
}

std::vector<double> default_radii(const Grid& grid, int count) {
  const double lo = kTwoPi / std::max(grid.dealias_cutoff(), 1);
  return geometric_radii(std::min(lo, std::numbers::pi / 4.0), std::numbers::pi / 2.0, count);
}

BesovEstimate besov_exponent_estimate(const StructureFunctionTable& table,
                                      std::optional<std::pair<double, double>> window) {
  BesovEstimate est;
  est.p = table.p;
  est.fit = window ? fit_power_law(table.radii, table.values, *window)
                   : fit_power_law(table.radii, table.values);
  est.s = est.fit.exponent / table.p;
  return est;
}

BesovEstimate besov_exponent_estimate(const SpectralVectorField& w, int p,
                                      std::optional<std::pair<double, double>> window) {
  const auto radii = default_radii(w.grid);
  return besov_exponent_estimate(structure_function(w, p, radii), window);
}

SigmaProbe sigma_probe(const SpectralVectorField& a, const SpectralVectorField& b,
                       const SpectralVectorField& c, std::span<const double> radii,
                       const DirectionSet& directions) {
  validate_radii(radii);
  if (!std::is_sorted(radii.begin(), radii.end())) throw ConfigError("radii must be ascending");
  const double volume = a.grid.volume();
  SigmaProbe probe;
  probe.radii.assign(radii.begin(), radii.end());
  const IncrementSampler sa(a), sb(b), sc(c);
  const bool ab = &a == &b, bc = &b == &c;
  const auto triple = radial_average(radii, directions, [&](const Eigen::Vector3d& xi) {
    const RealArray da = sa.magnitude(xi);
    const RealArray db = ab ? da : sb.magnitude(xi);
    const RealArray dc = bc ? db : sc.magnitude(xi);
    return (da * db * dc).mean() * volume;
  });
  for (std::size_t i = 0; i < radii.size(); ++i) probe.sigma.push_back(triple[i] / radii[i]);
  const std::size_t q = std::max<std::size_t>(1, radii.size() / 4);
  probe.trend = mean_of(probe.sigma, 0, q) <= mean_of(probe.sigma, radii.size() - q, radii.size());
  return probe;
}

}  // namespace aol
