#include "aol/mollifier.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "aol/errors.hpp"
#include "aol/quadrature.hpp"

namespace aol {
namespace {

double raw_rho(MollifierProfile p, double s) {
  if (s >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return p == MollifierProfile::bump ? std::exp(-1.0 / q) : q * q * q * q;
}

double raw_rho_prime(MollifierProfile p, double s) {
  if (s >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  if (p == MollifierProfile::bump) return std::exp(-1.0 / q) * (-2.0 * s / (q * q));
  return -8.0 * s * q * q * q;
}

double radial_mass(MollifierProfile p, int nodes) {
  const GaussLegendre gl = gauss_legendre(nodes);
  double m = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double s = gl.nodes[i];
    m += gl.weights[i] * raw_rho(p, s) * s * s;
  }
  return 4.0 * std::numbers::pi * m;
}

double normalization_for(MollifierProfile p) {
  static const double bump = 1.0 / radial_mass(MollifierProfile::bump, 200);
  static const double poly = 1.0 / radial_mass(MollifierProfile::polynomial, 200);
  return p == MollifierProfile::bump ? bump : poly;
}

}  // namespace

const char* to_string(MollifierProfile p) {
  return p == MollifierProfile::bump ? "bump" : "polynomial";
}

MollifierProfile mollifier_profile_from_string(const std::string& name) {
  if (name == "bump") return MollifierProfile::bump;
  if (name == "polynomial") return MollifierProfile::polynomial;
  throw ConfigError("unknown mollifier profile '" + name + "'");
}

Mollifier::Mollifier(MollifierProfile profile, double epsilon)
    : profile_(profile), epsilon_(epsilon), norm_(normalization_for(profile)) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("mollifier scale must be positive");
  }
}

double Mollifier::rho(double s) const noexcept { return raw_rho(profile_, s); }
double Mollifier::rho_prime(double s) const noexcept { return raw_rho_prime(profile_, s); }

double Mollifier::value(const Eigen::Vector3d& x) const noexcept {
  const double e3 = epsilon_ * epsilon_ * epsilon_;
  return norm_ * rho(x.norm() / epsilon_) / e3;
}

Eigen::Vector3d Mollifier::gradient(const Eigen::Vector3d& x) const noexcept {
  const double r = x.norm();
  if (r == 0.0) return Eigen::Vector3d::Zero();
  const double e4 = epsilon_ * epsilon_ * epsilon_ * epsilon_;
  return (norm_ * rho_prime(r / epsilon_) / e4) * (x / r);
}

double Mollifier::fourier(double k) const noexcept {
  static const GaussLegendre gl = gauss_legendre(256);
  const double kappa = k * epsilon_;
  double acc = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double s = gl.nodes[i];
    const double arg = kappa * s;
    const double sinc = arg == 0.0 ? 1.0 : std::sin(arg) / arg;
    acc += gl.weights[i] * rho(s) * s * s * sinc;
  }
  return 4.0 * std::numbers::pi * norm_ * acc;
}

RealArray fourier_symbol(const Mollifier& m, const Grid& grid) {
  // |k|^2 is an integer, so each shell is evaluated once
  const RealArray& k2 = grid.tables().k2;
  std::vector<double> shell(static_cast<std::size_t>(k2.maxCoeff()) + 1, std::nan(""));
  RealArray out(k2.size());
  for (Eigen::Index i = 0; i < k2.size(); ++i) {
    double& v = shell[static_cast<std::size_t>(std::lround(k2[i]))];
    if (std::isnan(v)) v = m.fourier(std::sqrt(k2[i]));
    out[i] = v;
  }
  return out;
}

double Mollifier::mass() const { return norm_ * radial_mass(profile_, 64); }

}  // namespace aol
