#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aol/defect.hpp"
#include "aol/filter.hpp"
#include "aol/mollifier.hpp"
#include "aol/models.hpp"
#include "aol/synthetic.hpp"

namespace aol {

struct DiagnosticsConfig {
  std::vector<std::string> defects;  // catalog labels
  std::vector<double> epsilons;      // empty: default ladder
  MollifierProfile mollifier = MollifierProfile::bump;
  int radial_nodes = 16;
  DefectEngine engine = DefectEngine::quadrature;
  std::vector<int> structure_p{3};
  std::vector<double> radii;  // empty: default radii
  std::optional<std::pair<double, double>> fit_window;
  std::optional<std::string> snapshot;  // analyse this file instead of the initial field
};

/// One document drives every subcommand.
struct RunConfig {
  ModelKind model = ModelKind::leray_alpha;
  int n = 32;
  double alpha = 0.5;
  FilterSpec filter;
  SynthSpec init;
  std::optional<SynthSpec> init_b;  // MHD only; defaults to init with seed + 1
  double dt = 1e-3;
  double t_end = 1.0;
  int snapshot_cadence = 0;  // steps between snapshots; 0 writes none
  int energy_cadence = 1;    // steps between energy samples
  DiagnosticsConfig diagnostics;
  std::string output_dir = "aol_out";
  std::uint64_t seed = 0;
  std::string hash;  // FNV-1a of the canonical document
};

/// Parses and validates a JSON document. Throws ConfigError naming the
/// offending path, e.g. "$.diagnostics.defects[0]: D9 requires mhd_leray_alpha".
RunConfig parse_config(const std::string& document);
RunConfig load_config(const std::string& path);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Initial model state described by the config.
ModelState initial_state(const RunConfig& config);

}  // namespace aol
