#pragma once

#include <string>

#include <Eigen/Core>

#include "aol/fields.hpp"

namespace aol {

/// Radial profile rho on [0, 1): bump exp(-1/(1-s^2)) or polynomial (1-s^2)^4.
enum class MollifierProfile { bump, polynomial };

const char* to_string(MollifierProfile p);
MollifierProfile mollifier_profile_from_string(const std::string& name);

/// phi_eps(x) = eps^-3 c rho(|x|/eps), with c chosen so that phi integrates to one.
class Mollifier {
 public:
  /// Throws ConfigError unless eps > 0.
  Mollifier(MollifierProfile profile, double epsilon);

  MollifierProfile profile() const noexcept { return profile_; }
  double epsilon() const noexcept { return epsilon_; }
  double normalization() const noexcept { return norm_; }

  /// Unnormalized profile and its derivative on the unit ball.
  double rho(double s) const noexcept;
  double rho_prime(double s) const noexcept;

  double value(const Eigen::Vector3d& x) const noexcept;
  Eigen::Vector3d gradient(const Eigen::Vector3d& x) const noexcept;

  /// Fourier multiplier of convolution with phi_eps at wavenumber magnitude |k|; 1 at k = 0.
  double fourier(double k) const noexcept;

  /// Radial quadrature of phi_eps over R^3 (should be 1).
  double mass() const;

  Mollifier with_epsilon(double eps) const { return Mollifier(profile_, eps); }

 private:
  MollifierProfile profile_;
  double epsilon_;
  double norm_;
};

/// Fourier multiplier of the mollifier at every half-spectrum entry of `grid`.
RealArray fourier_symbol(const Mollifier& m, const Grid& grid);

}  // namespace aol
