#pragma once

#include <vector>

#include <Eigen/Core>

namespace aol {

/// Gauss-Legendre rule mapped to (0, 1).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch; exact for polynomials of degree 2n - 1.
GaussLegendre gauss_legendre(int n);

/// Unit directions with weights summing to one (sphere average).
struct DirectionSet {
  std::vector<Eigen::Vector3d> directions;
  std::vector<double> weights;

  /// The 26 normalized offsets of the {-1,0,1}^3 stencil, ordered so that
  /// entries 2m and 2m+1 are antipodal, with degree-7 Lebedev weights.
  static DirectionSet stencil26();
  /// Same directions, equal weights.
  static DirectionSet stencil26_equal();
  static DirectionSet single(const Eigen::Vector3d& direction);

  std::size_t size() const noexcept { return directions.size(); }
};

/// Nodes for integrals over the eps-ball in spherical form. Radial nodes live
/// on the scaled radius s = |xi| / eps in (0, 1).
struct XiQuadrature {
  int radial_nodes = 16;
  DirectionSet directions = DirectionSet::stencil26();
  /// Double the radial count until the estimate moves by less than this
  /// relative amount; zero disables refinement.
  double refine_tolerance = 0.005;
  int max_radial_nodes = 128;
};

}  // namespace aol
