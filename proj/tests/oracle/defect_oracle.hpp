#pragma once

#include <array>
#include <optional>

#include "aol/defect.hpp"

namespace aol::oracle {

/// Dense-lattice evaluation of a defect term: trapezoidal sum over an
/// m^3 lattice covering [-eps, eps]^3 and a plain sum over all grid points.
/// Field values at x + xi come from separable direct DFT sums.
/// Returns the space-integrated value of every catalog entry D1..D11.
std::array<double, 11> brute_force_defects(const DefectFields& fields, double epsilon,
                                           int lattice = 48);

/// Bump profile exp(-1/(1-s^2)) normalized on R^3 by composite Simpson.
double bump_normalization();

}  // namespace aol::oracle
