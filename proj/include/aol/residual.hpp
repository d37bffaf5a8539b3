#pragma once

#include <span>
#include <vector>

#include "aol/models.hpp"
#include "aol/mollifier.hpp"

namespace aol {

struct EnergyBalanceResidual {
  std::vector<double> times;  // interior snapshot times
  std::vector<double> norms;  // L2 norm of the mollified local balance at each
  double max_norm = 0.0;
};

/// Local energy balance of a Leray-alpha (or Euler) run at fixed eps:
///   d_t(v . v_eps) + D_eps + div((v . v_eps) u) - 1/2 div((|v|^2)_eps u)
///     + 1/2 div((|v|^2 u)_eps) + div(p_eps v + p v_eps),
/// with the time derivative from centered differences over consecutive
/// snapshots spaced dt apart and D_eps from the spectral defect engine.
/// Products are formed on a grid of twice the
/// resolution so they are free of aliasing.
/// Throws ConfigError for fewer than three snapshots, mixed grids or models,
/// or spacing that does not match dt.
EnergyBalanceResidual energy_balance_residual(std::span<const ModelState> snapshots, double dt,
                                              const Mollifier& mollifier);

}  // namespace aol
