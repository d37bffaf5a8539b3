#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aol/fields.hpp"
#include "aol/fitting.hpp"
#include "aol/quadrature.hpp"

namespace aol {

/// Real-space samples of w(x + xi) - w(x).
RealVectorField increment(const SpectralVectorField& w, const Eigen::Vector3d& xi);

struct StructureFunctionTable {
  int p = 2;
  std::vector<double> radii;
  DirectionSet directions;
  std::vector<double> values;  // volume- and direction-averaged |dw|^p
};

/// Throws ConfigError unless p is 1, 2 or 3 and every radius lies in (0, pi].
StructureFunctionTable structure_function(const SpectralVectorField& w, int p,
                                          std::span<const double> radii,
                                          const DirectionSet& directions = DirectionSet::stencil26());

/// Geometric radii from `lo` to `hi`.
std::vector<double> geometric_radii(double lo, double hi, int count);

/// Radii spanning the inertial range of a grid: from the dealias wavelength
/// 2pi / (n/3) up to pi/2.
std::vector<double> default_radii(const Grid& grid, int count = 10);

struct BesovEstimate {
  SlopeFit fit;  // exponent is zeta_p
  int p = 3;
  double s = 0.0;  // zeta_p / p
};

/// Log-log fit of S_p(r). Throws DegenerateFitError on an all-zero table.
BesovEstimate besov_exponent_estimate(const StructureFunctionTable& table,
                                      std::optional<std::pair<double, double>> window = std::nullopt);
BesovEstimate besov_exponent_estimate(const SpectralVectorField& w, int p = 3,
                                      std::optional<std::pair<double, double>> window = std::nullopt);

struct SigmaProbe {
  std::vector<double> radii;
  std::vector<double> sigma;  // direction-averaged integral of |da||db||dc| over r
  bool trend = true;          // sigma on the smallest quartile of radii <= sigma on the largest
};

SigmaProbe sigma_probe(const SpectralVectorField& a, const SpectralVectorField& b,
                       const SpectralVectorField& c, std::span<const double> radii,
                       const DirectionSet& directions = DirectionSet::stencil26());

}  // namespace aol
