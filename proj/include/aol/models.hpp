#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aol/errors.hpp"
#include "aol/fields.hpp"
#include "aol/filter.hpp"

namespace aol {

enum class ModelKind {
  euler,
  leray_alpha,
  euler_alpha,
  modified_leray_alpha,
  clark_alpha,
  mhd_leray_alpha,
};

inline constexpr ModelKind kAllModels[] = {
    ModelKind::euler,         ModelKind::leray_alpha, ModelKind::euler_alpha,
    ModelKind::modified_leray_alpha, ModelKind::clark_alpha, ModelKind::mhd_leray_alpha,
};

const char* to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);
inline bool carries_magnetic_field(ModelKind k) { return k == ModelKind::mhd_leray_alpha; }

/// Evolved fields of one model. The advecting velocity u is never stored;
/// it is recovered from v through the filter (Euler uses u = v).
struct ModelState {
  ModelKind kind = ModelKind::leray_alpha;
  SpectralVectorField v;
  std::optional<SpectralVectorField> b;
  FilterSpec filter;
  double time = 0.0;

  ModelState(ModelKind k, SpectralVectorField v0, FilterSpec f,
             std::optional<SpectralVectorField> b0 = std::nullopt, double t = 0.0)
      : kind(k), v(std::move(v0)), b(std::move(b0)), filter(f), time(t) {}

  const Grid& grid() const { return v.grid; }
};

struct Tendency {
  SpectralVectorField dv;
  std::optional<SpectralVectorField> db;
};

/// Throws StateError when b is present/absent against the model kind.
void validate(const ModelState& state);

/// u for this state (identity for Euler).
SpectralVectorField advecting_velocity(const ModelState& state);

Tendency rhs(const ModelState& state);

/// One classical RK4 step. Throws BlowUpError on non-finite output.
ModelState step_rk4(const ModelState& state, double dt);

/// |v|^2 (Euler, Leray-alpha), |u|^2 + a^2|grad u|^2 (Euler-alpha, modified
/// Leray-alpha, Clark-alpha; <u, v> for a fractional filter), |v|^2 + |B|^2 (MHD).
double conserved_quantity(const ModelState& state);

/// Pairing that the semi-discrete tendency must annihilate:
/// <v,dv> (Euler, Leray), <u,dv> (H1 models), <v,dv> + <B,db> (MHD).
double tendency_pairing(const ModelState& state, const Tendency& tendency);

struct TrajectorySample {
  double time;
  double energy;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<ModelState> snapshots;
};

/// Raised by run_simulation; carries the samples recorded before failure.
class SimulationAborted : public BlowUpError {
 public:
  SimulationAborted(const std::string& what, double time, Trajectory partial)
      : BlowUpError(what, time), partial_(std::move(partial)) {}
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  Trajectory partial_;
};

struct SimulationOptions {
  double dt = 1e-3;
  double t_end = 1.0;
  int cadence = 1;               // record every `cadence` steps
  bool keep_snapshots = false;
  double blowup_energy_jump = 0.1;
  /// Called with the step index and state at t = 0 and every recorded sample.
  std::function<void(long, const ModelState&)> on_sample;
};

/// Fixed-step RK4 run; records t = 0 and every `cadence` steps.
/// Throws ConfigError if cadence does not divide the step count.
Trajectory run_simulation(const ModelState& initial, const SimulationOptions& options);

}  // namespace aol
