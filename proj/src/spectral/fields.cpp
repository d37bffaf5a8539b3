#include "aol/fields.hpp"

#include <algorithm>

#include "aol/errors.hpp"

namespace aol {

RealVectorField to_real(const SpectralVectorField& w) {
  RealVectorField out(w.grid);
  for (int i = 0; i < 3; ++i) out.c[i] = inverse_transform(w.grid, w.c[i]);
  return out;
}

SpectralVectorField to_spectral(const RealVectorField& w) {
  SpectralVectorField out(w.grid);
  for (int i = 0; i < 3; ++i) out.c[i] = forward_transform(w.grid, w.c[i]);
  return out;
}

RealArray to_real(const ScalarField& s) { return inverse_transform(s.grid, s.coeffs); }

ScalarField to_spectral(const Grid& grid, const RealArray& samples) {
  ScalarField out(grid);
  out.coeffs = forward_transform(grid, samples);
  return out;
}

double spectral_dot(const Grid& grid, const ComplexArray& a, const ComplexArray& b) {
  return (grid.tables().multiplicity * (a.conjugate() * b).real()).sum();
}

double inner_product(const SpectralVectorField& a, const SpectralVectorField& b) {
  if (!(a.grid == b.grid)) throw ConfigError("inner_product: grid mismatch");
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += spectral_dot(a.grid, a.c[i], b.c[i]);
  return s * a.grid.volume();
}

ComplexArray resample(const Grid& from, const ComplexArray& coeffs, const Grid& to) {
  ComplexArray out = ComplexArray::Zero(static_cast<Eigen::Index>(to.spectral_size()));
  // Nyquist planes of either grid are dropped.
  const int kmax = std::min(from.n(), to.n()) / 2 - 1;
  for (int kz = -kmax; kz <= kmax; ++kz) {
    for (int ky = -kmax; ky <= kmax; ++ky) {
      for (int kx = 0; kx <= kmax; ++kx) {
        out[static_cast<Eigen::Index>(to.spectral_index(kx, ky, kz))] =
            coeffs[static_cast<Eigen::Index>(from.spectral_index(kx, ky, kz))];
      }
    }
  }
  return out;
}

SpectralVectorField resample(const SpectralVectorField& w, const Grid& to) {
  SpectralVectorField out(to);
  for (int i = 0; i < 3; ++i) out.c[i] = resample(w.grid, w.c[i], to);
  out.divergence_free = w.divergence_free;
  return out;
}

}  // namespace aol
