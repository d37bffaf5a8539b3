#include "aol/models.hpp"

#include <cmath>
#include <complex>
#include <functional>

#include "aol/spectral_ops.hpp"

namespace aol {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

const RealArray& dk(const Grid& g, int axis) {
  const auto& t = g.tables();
  return axis == 0 ? t.dx : (axis == 1 ? t.dy : t.dz);
}

using TensorEntry = std::function<RealArray(int i, int j)>;

// Component j of d_i T_ij with each entry formed in real space and de-aliased.
SpectralVectorField product_divergence(const Grid& g, const TensorEntry& entry, bool symmetric) {
  SpectralVectorField out(g);
  for (int i = 0; i < 3; ++i) {
    for (int j = symmetric ? i : 0; j < 3; ++j) {
      ComplexArray t = forward_transform(g, entry(i, j));
      dealias(t, g);
      out.c[j] += kI * dk(g, i) * t;
      if (symmetric && i != j) out.c[i] += kI * dk(g, j) * t;
    }
  }
  return out;
}

SpectralVectorField project_and_negate(SpectralVectorField n) {
  n = leray_project(n);
  n *= -1.0;
  dealias(n);
  n.divergence_free = true;
  return n;
}

bool all_finite(const SpectralVectorField& w) {
  for (const auto& comp : w.c) {
    if (!comp.allFinite()) return false;
  }
  return true;
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::euler: return "euler";
    case ModelKind::leray_alpha: return "leray_alpha";
    case ModelKind::euler_alpha: return "euler_alpha";
    case ModelKind::modified_leray_alpha: return "modified_leray_alpha";
    case ModelKind::clark_alpha: return "clark_alpha";
    case ModelKind::mhd_leray_alpha: return "mhd_leray_alpha";
  }
  return "euler";
}

ModelKind model_kind_from_string(const std::string& name) {
  for (ModelKind k : kAllModels) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown model '" + name + "'");
}

void validate(const ModelState& state) {
  if (carries_magnetic_field(state.kind) && !state.b) {
    throw StateError("mhd_leray_alpha state requires a magnetic field");
  }
  if (!carries_magnetic_field(state.kind) && state.b) {
    throw StateError(std::string("model ") + to_string(state.kind) +
                     " does not carry a magnetic field");
  }
  if (state.b && !(state.b->grid == state.v.grid)) {
    throw StateError("v and B live on different grids");
  }
  validate(state.filter);
}

SpectralVectorField advecting_velocity(const ModelState& state) {
  if (state.kind == ModelKind::euler) return state.v;
  return apply_inverse_filter(state.filter, state.v);
}

Tendency rhs(const ModelState& state) {
  validate(state);
  const Grid& g = state.grid();
  const RealVectorField v = to_real(state.v);

  if (state.kind == ModelKind::euler) {
    auto n = product_divergence(g, [&](int i, int j) -> RealArray { return v.c[i] * v.c[j]; }, true);
    return {project_and_negate(std::move(n)), std::nullopt};
  }

  const SpectralVectorField u_hat = advecting_velocity(state);
  const RealVectorField u = to_real(u_hat);

  switch (state.kind) {
    case ModelKind::leray_alpha: {
      auto n = product_divergence(g, [&](int i, int j) -> RealArray { return u.c[i] * v.c[j]; }, false);
      return {project_and_negate(std::move(n)), std::nullopt};
    }
    case ModelKind::euler_alpha: {
      auto n = product_divergence(g, [&](int i, int j) -> RealArray { return u.c[i] * v.c[j]; }, false);
      // + sum_j v_j grad u_j
      const SpectralTensorField gu = gradient(u_hat);
      for (int i = 0; i < 3; ++i) {
        RealArray acc = RealArray::Zero(static_cast<Eigen::Index>(g.real_size()));
        for (int j = 0; j < 3; ++j) {
          acc += v.c[j] * inverse_transform(g, gu.c[SpectralTensorField::index(i, j)]);
        }
        ComplexArray t = forward_transform(g, acc);
        dealias(t, g);
        n.c[i] += t;
      }
      return {project_and_negate(std::move(n)), std::nullopt};
    }
    case ModelKind::modified_leray_alpha: {
      auto n = product_divergence(g, [&](int i, int j) -> RealArray { return v.c[i] * u.c[j]; }, false);
      return {project_and_negate(std::move(n)), std::nullopt};
    }
    case ModelKind::clark_alpha: {
      const SpectralTensorField gu_hat = gradient(u_hat);
      std::array<RealArray, 9> gu;
      for (int m = 0; m < 9; ++m) gu[m] = inverse_transform(g, gu_hat.c[m]);
      const double a2 = state.filter.alpha * state.filter.alpha;
      auto entry = [&](int i, int j) -> RealArray {
        RealArray t = u.c[i] * v.c[j] + v.c[i] * u.c[j] - u.c[i] * u.c[j];
        for (int l = 0; l < 3; ++l) {
          t -= a2 * gu[SpectralTensorField::index(l, i)] * gu[SpectralTensorField::index(l, j)];
        }
        return t;
      };
      auto n = product_divergence(g, entry, true);
      return {project_and_negate(std::move(n)), std::nullopt};
    }
    case ModelKind::mhd_leray_alpha: {
      const RealVectorField b = to_real(*state.b);
      auto nv = product_divergence(
          g, [&](int i, int j) -> RealArray { return u.c[i] * v.c[j] - b.c[i] * b.c[j]; }, false);
      auto nb = product_divergence(
          g, [&](int i, int j) -> RealArray { return u.c[i] * b.c[j] - b.c[i] * v.c[j]; }, false);
      return {project_and_negate(std::move(nv)), project_and_negate(std::move(nb))};
    }
    case ModelKind::euler:
      break;
  }
  throw StateError("unhandled model kind");
}

ModelState step_rk4(const ModelState& state, double dt) {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  auto advance = [&](const Tendency& k, double h) {
    ModelState s = state;
    s.v += h * k.dv;
    if (s.b) *s.b += h * *k.db;
    s.time = state.time + h;
    return s;
  };
  const Tendency k1 = rhs(state);
  const Tendency k2 = rhs(advance(k1, 0.5 * dt));
  const Tendency k3 = rhs(advance(k2, 0.5 * dt));
  const Tendency k4 = rhs(advance(k3, dt));

  ModelState out = state;
  out.v += (dt / 6.0) * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
  if (out.b) *out.b += (dt / 6.0) * (*k1.db + 2.0 * *k2.db + 2.0 * *k3.db + *k4.db);
  out.time = state.time + dt;
  out.v.divergence_free = state.v.divergence_free;
  if (out.b) out.b->divergence_free = state.b->divergence_free;

  if (!all_finite(out.v) || (out.b && !all_finite(*out.b))) {
    throw BlowUpError("non-finite state after RK4 step", out.time);
  }
  return out;
}

double conserved_quantity(const ModelState& state) {
  switch (state.kind) {
    case ModelKind::euler:
    case ModelKind::leray_alpha:
      return norms(state.v, 0.0).l2_sq;
    case ModelKind::mhd_leray_alpha:
      return norms(state.v, 0.0).l2_sq + (state.b ? norms(*state.b, 0.0).l2_sq : 0.0);
    case ModelKind::euler_alpha:
    case ModelKind::modified_leray_alpha:
    case ModelKind::clark_alpha: {
      const SpectralVectorField u = advecting_velocity(state);
      if (state.filter.kind == FilterKind::fractional) return inner_product(u, state.v);
      const double a = state.filter.kind == FilterKind::helmholtz ? state.filter.alpha : 0.0;
      return norms(u, a).h1_alpha_sq;
    }
  }
  return 0.0;
}

double tendency_pairing(const ModelState& state, const Tendency& tendency) {
  switch (state.kind) {
    case ModelKind::euler:
    case ModelKind::leray_alpha:
      return inner_product(state.v, tendency.dv);
    case ModelKind::mhd_leray_alpha:
      return inner_product(state.v, tendency.dv) + inner_product(*state.b, *tendency.db);
    default:
      return inner_product(advecting_velocity(state), tendency.dv);
  }
}

Trajectory run_simulation(const ModelState& initial, const SimulationOptions& opt) {
  if (!(opt.t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (!(opt.dt > 0.0)) throw ConfigError("dt must be positive");
  const long steps = std::lround(opt.t_end / opt.dt);
  if (steps < 1 || std::abs(steps * opt.dt - opt.t_end) > 1e-9 * opt.t_end) {
    throw ConfigError("t_end must be an integer multiple of dt");
  }
  if (opt.cadence < 1 || steps % opt.cadence != 0) {
    throw ConfigError("snapshot cadence " + std::to_string(opt.cadence) +
                      " does not divide the step count " + std::to_string(steps));
  }
  validate(initial);

  Trajectory traj;
  const double e0 = conserved_quantity(initial);
  traj.samples.push_back({initial.time, e0});
  if (opt.keep_snapshots) traj.snapshots.push_back(initial);
  if (opt.on_sample) opt.on_sample(0, initial);

  ModelState state = initial;
  for (long s = 1; s <= steps; ++s) {
    try {
      state = step_rk4(state, opt.dt);
    } catch (const BlowUpError& e) {
      throw SimulationAborted(e.what(), e.time(), std::move(traj));
    }
    // Re-anchor the clock so long runs do not accumulate round-off in time.
    state.time = initial.time + static_cast<double>(s) * opt.dt;
    const double e = conserved_quantity(state);
    if (!std::isfinite(e) || std::abs(e - e0) > opt.blowup_energy_jump * std::abs(e0)) {
      throw SimulationAborted("conserved quantity jumped beyond the blow-up threshold",
                              state.time, std::move(traj));
    }
    if (s % opt.cadence == 0) {
      traj.samples.push_back({state.time, e});
      if (opt.keep_snapshots) traj.snapshots.push_back(state);
      if (opt.on_sample) opt.on_sample(s, state);
    }
  }
  return traj;
}

}  // namespace aol
