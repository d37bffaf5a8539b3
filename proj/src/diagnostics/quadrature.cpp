#include "aol/quadrature.hpp"

#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "aol/errors.hpp"

namespace aol {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw ConfigError("Gauss-Legendre rule needs at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (solver.eigenvalues()(i) + 1.0);
    rule.weights[static_cast<std::size_t>(i)] = v0 * v0;  // 2 v0^2 on [-1,1], halved
  }
  return rule;
}

namespace {

std::vector<Eigen::Vector3d> stencil_directions() {
  std::vector<Eigen::Vector3d> out;
  for (int z = -1; z <= 1; ++z) {
    for (int y = -1; y <= 1; ++y) {
      for (int x = -1; x <= 1; ++x) {
        const Eigen::Vector3d d(x, y, z);
        // keep the lexicographically positive half, then append its antipode
        const bool positive = x > 0 || (x == 0 && (y > 0 || (y == 0 && z > 0)));
        if (!positive) continue;
        out.push_back(d.normalized());
        out.push_back(-d.normalized());
      }
    }
  }
  return out;
}

}  // namespace

DirectionSet DirectionSet::stencil26() {
  DirectionSet set;
  set.directions = stencil_directions();
  for (const auto& d : set.directions) {
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) nonzero += std::abs(d[i]) > 1e-12 ? 1 : 0;
    const std::array<double, 3> lebedev{1.0 / 21.0, 4.0 / 105.0, 9.0 / 280.0};
    set.weights.push_back(lebedev[static_cast<std::size_t>(nonzero - 1)]);
  }
  return set;
}

DirectionSet DirectionSet::stencil26_equal() {
  DirectionSet set;
  set.directions = stencil_directions();
  set.weights.assign(set.directions.size(), 1.0 / static_cast<double>(set.directions.size()));
  return set;
}

DirectionSet DirectionSet::single(const Eigen::Vector3d& direction) {
  DirectionSet set;
  set.directions.push_back(direction.normalized());
  set.weights.push_back(1.0);
  return set;
}

}  // namespace aol
