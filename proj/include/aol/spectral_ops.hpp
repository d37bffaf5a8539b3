#pragma once

#include <Eigen/Core>

#include "aol/fields.hpp"

namespace aol {

/// Zero every mode with some |k_i| > n/3 (and the Nyquist planes).
void dealias(ComplexArray& coeffs, const Grid& grid);
void dealias(SpectralVectorField& w);

/// Helmholtz-Leray projection onto divergence-free fields; the mean mode is kept.
SpectralVectorField leray_project(const SpectralVectorField& w);

/// Pressure from Delta p = -(grad x grad) : (u x v), mean zero.
/// The product is formed in real space and de-aliased.
ScalarField solve_pressure(const SpectralVectorField& u, const SpectralVectorField& v);

/// w(x + xi), exact for band-limited fields without Nyquist content.
SpectralVectorField shift(const SpectralVectorField& w, const Eigen::Vector3d& xi);

SpectralTensorField gradient(const SpectralVectorField& w);
ScalarField divergence(const SpectralVectorField& w);
/// Vector with component j = d_i T_ij for a symmetric-or-not tensor stored at 3*i+j.
SpectralVectorField tensor_divergence(const SpectralTensorField& t);

struct FieldNorms {
  double l2_sq = 0.0;        // ||w||^2
  double h1_alpha_sq = 0.0;  // ||w||^2 + alpha^2 ||grad w||^2
};

FieldNorms norms(const SpectralVectorField& w, double alpha);

/// Largest |k . c(k)| over all modes.
double max_divergence(const SpectralVectorField& w);

/// Largest coefficient magnitude over all components.
double max_abs(const SpectralVectorField& w);

}  // namespace aol
