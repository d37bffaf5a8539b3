#include "aol/residual.hpp"

#include <algorithm>
#include <cmath>

#include "aol/defect.hpp"
#include "aol/errors.hpp"
#include "aol/spectral_ops.hpp"

namespace aol {
namespace {

struct PaddedState {
  RealVectorField u;
  RealVectorField v;
  RealVectorField v_eps;
  RealArray p;
  SpectralVectorField u_hat;
  SpectralVectorField v_hat;
};

class Smoother {
 public:
  Smoother(const Grid& g, const Mollifier& m) : grid_(g), symbol_(fourier_symbol(m, g)) {}
  ComplexArray apply(const ComplexArray& c) const { return c * symbol_.cast<std::complex<double>>(); }
  RealArray apply(const RealArray& f) const {
    return inverse_transform(grid_, apply(forward_transform(grid_, f)));
  }
  RealVectorField apply(const SpectralVectorField& w) const {
    SpectralVectorField s = w;
    for (auto& c : s.c) c = apply(c);
    return to_real(s);
  }

 private:
  Grid grid_;
  RealArray symbol_;
};

RealArray dot(const RealVectorField& a, const RealVectorField& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

// div(f w) for a scalar f and vector w sampled on the same grid.
RealArray flux_divergence(const RealArray& f, const RealVectorField& w) {
  RealVectorField fw(w.grid);
  for (int i = 0; i < 3; ++i) fw.c[i] = f * w.c[i];
  return to_real(divergence(to_spectral(fw)));
}

PaddedState pad(const ModelState& s, const Grid& fine, const Smoother& smooth) {
  PaddedState p{RealVectorField(fine), RealVectorField(fine), RealVectorField(fine),
                RealArray(), SpectralVectorField(fine), SpectralVectorField(fine)};
  p.u_hat = resample(advecting_velocity(s), fine);
  p.v_hat = resample(s.v, fine);
  p.u = to_real(p.u_hat);
  p.v = to_real(p.v_hat);
  p.v_eps = smooth.apply(p.v_hat);
  p.p = to_real(solve_pressure(p.u_hat, p.v_hat));
  return p;
}

}  // namespace

EnergyBalanceResidual energy_balance_residual(std::span<const ModelState> snapshots, double dt,
                                              const Mollifier& mollifier) {
  if (snapshots.size() < 3) {
    throw ConfigError("energy balance residual needs at least three snapshots");
  }
  if (!(dt > 0.0)) throw ConfigError("snapshot spacing must be positive");
  const ModelState& first = snapshots.front();
  if (first.kind != ModelKind::leray_alpha && first.kind != ModelKind::euler) {
    throw ConfigError("energy balance residual is defined for leray_alpha and euler runs");
  }
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    const ModelState& s = snapshots[i];
    if (s.kind != first.kind || !(s.grid() == first.grid())) {
      throw ConfigError("snapshots mix models or grids");
    }
    if (i > 0) {
      const double gap = s.time - snapshots[i - 1].time;
      if (std::abs(gap - dt) > 1e-9 * std::max(1.0, std::abs(s.time))) {
        throw ConfigError("snapshot spacing does not match dt");
      }
    }
  }

  const Grid fine(2 * first.grid().n());
  const Smoother smooth(fine, mollifier);
  const DefectSpec d1[] = {defect_spec("D1")};
  const double cell = fine.volume() / static_cast<double>(fine.real_size());

  std::vector<PaddedState> padded;
  padded.reserve(snapshots.size());
  for (const auto& s : snapshots) padded.push_back(pad(s, fine, smooth));

  EnergyBalanceResidual out;
  for (std::size_t i = 1; i + 1 < padded.size(); ++i) {
    const PaddedState& s = padded[i];
    const RealArray vv = s.v.c[0].square() + s.v.c[1].square() + s.v.c[2].square();

    RealArray r = (dot(padded[i + 1].v, padded[i + 1].v_eps) - dot(padded[i - 1].v, padded[i - 1].v_eps)) /
                  (2.0 * dt);
    r += flux_divergence(dot(s.v, s.v_eps), s.u);
    r -= 0.5 * flux_divergence(smooth.apply(vv), s.u);
    RealVectorField vvu(fine);
    for (int k = 0; k < 3; ++k) vvu.c[k] = smooth.apply(RealArray(vv * s.u.c[k]));
    r += 0.5 * to_real(divergence(to_spectral(vvu)));
    r += flux_divergence(smooth.apply(s.p), s.v);
    r += flux_divergence(s.p, s.v_eps);

    const DefectFields fields{s.u_hat, s.v_hat, std::nullopt};
    r += defect_estimate_spectral(d1, fields, mollifier, true).front().local;

    const double norm = std::sqrt(r.square().sum() * cell);
    out.times.push_back(snapshots[i].time);
    out.norms.push_back(norm);
    out.max_norm = std::max(out.max_norm, norm);
  }
  return out;
}

}  // namespace aol
