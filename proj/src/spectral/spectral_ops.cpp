#include "aol/spectral_ops.hpp"

#include <cmath>
#include <complex>

#include "aol/errors.hpp"

namespace aol {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

const RealArray& diff_wavenumber(const Grid& g, int axis) {
  const auto& t = g.tables();
  return axis == 0 ? t.dx : (axis == 1 ? t.dy : t.dz);
}

const RealArray& wavenumber(const Grid& g, int axis) {
  const auto& t = g.tables();
  return axis == 0 ? t.kx : (axis == 1 ? t.ky : t.kz);
}

}  // namespace

void dealias(ComplexArray& coeffs, const Grid& grid) { coeffs *= grid.tables().dealias_mask; }

void dealias(SpectralVectorField& w) {
  for (auto& comp : w.c) dealias(comp, w.grid);
}

SpectralVectorField leray_project(const SpectralVectorField& w) {
  const auto& t = w.grid.tables();
  const RealArray inv_k2 = (t.k2 > 0.0).select(t.k2.inverse(), 0.0);
  const ComplexArray kdotw = t.kx * w.c[0] + t.ky * w.c[1] + t.kz * w.c[2];
  SpectralVectorField out(w.grid);
  for (int i = 0; i < 3; ++i) {
    out.c[i] = w.c[i] - wavenumber(w.grid, i) * kdotw * inv_k2;
  }
  out.divergence_free = true;
  return out;
}

ScalarField solve_pressure(const SpectralVectorField& u, const SpectralVectorField& v) {
  if (!(u.grid == v.grid)) throw ConfigError("solve_pressure: grid mismatch");
  const Grid& g = u.grid;
  const auto& t = g.tables();
  const RealVectorField ur = to_real(u);
  const RealVectorField vr = to_real(v);
  ComplexArray rhs = ComplexArray::Zero(static_cast<Eigen::Index>(g.spectral_size()));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      ComplexArray prod = forward_transform(g, ur.c[i] * vr.c[j]);
      dealias(prod, g);
      rhs += diff_wavenumber(g, i) * diff_wavenumber(g, j) * prod;
    }
  }
  // -|k|^2 p = k_i k_j (u_i v_j)^  ->  p = -k_i k_j (u_i v_j)^ / |k|^2
  const RealArray inv_k2 = (t.k2 > 0.0).select(t.k2.inverse(), 0.0);
  ScalarField p(g);
  p.coeffs = -rhs * inv_k2;
  return p;
}

SpectralVectorField shift(const SpectralVectorField& w, const Eigen::Vector3d& xi) {
  const auto& t = w.grid.tables();
  const RealArray phase = t.dx * xi.x() + t.dy * xi.y() + t.dz * xi.z();
  const ComplexArray factor = (kI * phase.cast<std::complex<double>>()).exp();
  SpectralVectorField out(w.grid);
  for (int i = 0; i < 3; ++i) out.c[i] = w.c[i] * factor;
  out.divergence_free = w.divergence_free;
  return out;
}

SpectralTensorField gradient(const SpectralVectorField& w) {
  SpectralTensorField out(w.grid);
  for (int i = 0; i < 3; ++i) {
    const ComplexArray ik = kI * diff_wavenumber(w.grid, i).cast<std::complex<double>>();
    for (int j = 0; j < 3; ++j) out.c[SpectralTensorField::index(i, j)] = ik * w.c[j];
  }
  return out;
}

ScalarField divergence(const SpectralVectorField& w) {
  ScalarField out(w.grid);
  for (int i = 0; i < 3; ++i) out.coeffs += kI * diff_wavenumber(w.grid, i) * w.c[i];
  return out;
}

SpectralVectorField tensor_divergence(const SpectralTensorField& t) {
  SpectralVectorField out(t.grid);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      out.c[j] += kI * diff_wavenumber(t.grid, i) * t.c[SpectralTensorField::index(i, j)];
    }
  }
  return out;
}

FieldNorms norms(const SpectralVectorField& w, double alpha) {
  const Grid& g = w.grid;
  const auto& t = g.tables();
  const RealArray k2d = t.dx.square() + t.dy.square() + t.dz.square();
  double l2 = 0.0;
  double grad = 0.0;
  for (const auto& comp : w.c) {
    const RealArray e = t.multiplicity * comp.abs2();
    l2 += e.sum();
    grad += (e * k2d).sum();
  }
  l2 *= g.volume();
  grad *= g.volume();
  return {l2, l2 + alpha * alpha * grad};
}

double max_divergence(const SpectralVectorField& w) {
  const auto& t = w.grid.tables();
  return (t.kx * w.c[0] + t.ky * w.c[1] + t.kz * w.c[2]).abs().maxCoeff();
}

double max_abs(const SpectralVectorField& w) {
  double m = 0.0;
  for (const auto& comp : w.c) m = std::max(m, comp.abs().maxCoeff());
  return m;
}

}  // namespace aol
