#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Core>

#include "aol/grid.hpp"

namespace aol {

using RealArray = Eigen::ArrayXd;
using ComplexArray = Eigen::ArrayXcd;

/// Fourier coefficients of a real scalar field (half-spectrum layout).
struct ScalarField {
  Grid grid;
  ComplexArray coeffs;

  explicit ScalarField(const Grid& g) : grid(g), coeffs(ComplexArray::Zero(g.spectral_size())) {}
};

/// Divergence-free (when flagged) real vector field on the 3-torus, stored
/// as three arrays of Fourier coefficients.
struct SpectralVectorField {
  Grid grid;
  std::array<ComplexArray, 3> c;
  bool divergence_free = false;

  explicit SpectralVectorField(const Grid& g) : grid(g) {
    for (auto& comp : c) comp = ComplexArray::Zero(g.spectral_size());
  }

  SpectralVectorField& operator+=(const SpectralVectorField& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    divergence_free = divergence_free && o.divergence_free;
    return *this;
  }
  SpectralVectorField& operator-=(const SpectralVectorField& o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    divergence_free = divergence_free && o.divergence_free;
    return *this;
  }
  SpectralVectorField& operator*=(double s) {
    for (auto& comp : c) comp *= s;
    return *this;
  }
};

inline SpectralVectorField operator+(SpectralVectorField a, const SpectralVectorField& b) { return a += b; }
inline SpectralVectorField operator-(SpectralVectorField a, const SpectralVectorField& b) { return a -= b; }
inline SpectralVectorField operator*(double s, SpectralVectorField a) { return a *= s; }

/// Rank-2 spectral field; component (i, j) holds d_i w_j at index 3*i + j.
struct SpectralTensorField {
  Grid grid;
  std::array<ComplexArray, 9> c;

  explicit SpectralTensorField(const Grid& g) : grid(g) {
    for (auto& comp : c) comp = ComplexArray::Zero(g.spectral_size());
  }
  static constexpr int index(int i, int j) noexcept { return 3 * i + j; }
};

/// Real-space samples of a vector field, component-major.
struct RealVectorField {
  Grid grid;
  std::array<RealArray, 3> c;

  explicit RealVectorField(const Grid& g) : grid(g) {
    for (auto& comp : c) comp = RealArray::Zero(g.real_size());
  }
};

// Transforms. Coefficients are normalized so that f(x) = sum_k c(k) e^{i k.x}.
RealArray inverse_transform(const Grid& grid, const ComplexArray& coeffs);
ComplexArray forward_transform(const Grid& grid, const RealArray& samples);
/// Inverse transform into a caller-owned buffer; `coeffs` is overwritten.
void inverse_transform_in_place(const Grid& grid, ComplexArray& coeffs, RealArray& out);

RealVectorField to_real(const SpectralVectorField& w);
SpectralVectorField to_spectral(const RealVectorField& w);
RealArray to_real(const ScalarField& s);
ScalarField to_spectral(const Grid& grid, const RealArray& samples);

/// Sum over the full (both half-) spectrum of conj(a) b, i.e. the mean of a*b in real space.
double spectral_dot(const Grid& grid, const ComplexArray& a, const ComplexArray& b);

/// L2 inner product over [0,2pi)^3: integral of a . b dx.
double inner_product(const SpectralVectorField& a, const SpectralVectorField& b);

/// Coefficients at the given grid size, zero-padded or truncated.
ComplexArray resample(const Grid& from, const ComplexArray& coeffs, const Grid& to);
SpectralVectorField resample(const SpectralVectorField& w, const Grid& to);

}  // namespace aol
