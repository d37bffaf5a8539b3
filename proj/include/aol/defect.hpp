#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aol/fields.hpp"
#include "aol/models.hpp"
#include "aol/mollifier.hpp"
#include "aol/quadrature.hpp"

namespace aol {

enum class DefectPattern {
  /// prefactor * int d_i phi_eps(xi) da_i (db . dc) dxi
  P1,
  /// int d_i phi_eps(xi) du_j d(d_k u_i) d(d_k u_j) dxi
  P3,
};

/// grad_u flattens the nine components d_k u_i into the dot product.
enum class FieldRole { u, v, b, grad_u };

struct DefectSpec {
  DefectPattern pattern = DefectPattern::P1;
  FieldRole a = FieldRole::u;
  FieldRole b = FieldRole::v;
  FieldRole c = FieldRole::v;
  double prefactor = 0.5;
  std::string label;
};

/// The catalog D1..D11, index 0 holding D1.
std::span<const DefectSpec> defect_catalog();
/// "D1".."D11"; throws ConfigError for anything else.
const DefectSpec& defect_spec(std::string_view label);
bool uses_magnetic_field(const DefectSpec& spec);
/// D9..D11 belong to the MHD energy balance.
bool requires_mhd(const DefectSpec& spec);

/// Role fields on a common grid. grad_u is derived from u on demand.
struct DefectFields {
  SpectralVectorField u;
  SpectralVectorField v;
  std::optional<SpectralVectorField> b;

  /// u, v (and B) as the model defines them.
  static DefectFields from_state(const ModelState& state);
};

struct DefectEstimate {
  std::string label;
  double epsilon = 0.0;
  double value = 0.0;      // integral of D_eps over the torus
  double magnitude = 0.0;  // integral of |D_eps| over the torus
  int radial_nodes = 0;
  RealArray local;         // D_eps(x) on the grid, when requested
};

/// Throws ConfigError unless grid spacing < eps < pi.
void validate_epsilon(double epsilon, const Grid& grid);

/// Nested quadrature: outer sum over xi nodes (radial Gauss-Legendre times
/// direction set), inner exact grid average over x. All specs share the
/// shifted role fields of each node.
std::vector<DefectEstimate> defect_estimate(std::span<const DefectSpec> specs,
                                            const DefectFields& fields,
                                            const Mollifier& mollifier,
                                            const XiQuadrature& quad,
                                            bool keep_local = false);

DefectEstimate defect_estimate(const DefectSpec& spec, const DefectFields& fields,
                               const Mollifier& mollifier, const XiQuadrature& quad,
                               bool keep_local = false);

/// Same quantities without xi nodes: the increment product is expanded and
/// each term integrated against grad phi_eps exactly as a Fourier multiplier
/// on a grid of twice the resolution. Agrees with the quadrature to its
/// tolerance and costs a few dozen transforms per scale.
std::vector<DefectEstimate> defect_estimate_spectral(std::span<const DefectSpec> specs,
                                                     const DefectFields& fields,
                                                     const Mollifier& mollifier,
                                                     bool keep_local = false);

enum class DefectEngine { quadrature, spectral };

/// Estimates over a descending ladder of eps with the log-log slope of the
/// L1 magnitude.
struct DefectSeries {
  std::string label;
  std::vector<double> epsilons;
  std::vector<double> values;
  std::vector<double> magnitudes;
  std::optional<double> slope;  // empty when every magnitude vanishes
  double r2 = 0.0;

  bool degenerate() const noexcept { return !slope.has_value(); }
};

/// Geometric, 8 points from pi/4 down to max(min(4h, pi/12), pi/64, 1.5h).
std::vector<double> default_epsilon_ladder(const Grid& grid, int points = 8);

/// Strictly decreasing, each entry accepted by validate_epsilon.
void validate_ladder(std::span<const double> ladder, const Grid& grid);

std::vector<DefectSeries> defect_series(std::span<const DefectSpec> specs,
                                        const DefectFields& fields,
                                        std::span<const double> ladder,
                                        MollifierProfile profile, const XiQuadrature& quad,
                                        DefectEngine engine = DefectEngine::quadrature);

DefectSeries defect_series(const DefectSpec& spec, const DefectFields& fields,
                           std::span<const double> ladder, MollifierProfile profile,
                           const XiQuadrature& quad, DefectEngine engine = DefectEngine::quadrature);

}  // namespace aol
