#include "aol/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include <CLI11.hpp>

#include "aol/config.hpp"
#include "aol/csv.hpp"
#include "aol/defect.hpp"
#include "aol/errors.hpp"
#include "aol/exponents.hpp"
#include "aol/snapshot.hpp"
#include "aol/structure.hpp"
#include "aol/verify.hpp"

namespace aol {
namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const RunConfig& c, const std::string& name) {
  fs::create_directories(c.output_dir);
  const fs::path path = fs::path(c.output_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

ModelState analysed_state(const RunConfig& c) {
  if (c.diagnostics.snapshot) {
    const ModelState s = snapshot_state(read_snapshot(*c.diagnostics.snapshot), c.model);
    if (s.grid().n() != c.n) throw ConfigError("$.diagnostics.snapshot: grid does not match n");
    return s;
  }
  return initial_state(c);
}

std::string snapshot_name(long step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshot_%08ld.aol", step);
  return buf;
}

int simulate(const RunConfig& c, std::ostream& out) {
  std::ofstream file = open_output(c, "energy.csv");
  CsvWriter csv(file, c.hash, {"time", "energy", "relative_drift"});

  SimulationOptions opt;
  opt.dt = c.dt;
  opt.t_end = c.t_end;
  opt.cadence = c.energy_cadence;
  double e0 = 0.0;
  long written = 0;
  opt.on_sample = [&](long step, const ModelState& s) {
    const double e = conserved_quantity(s);
    if (step == 0) e0 = e;
    const double drift = e0 != 0.0 ? std::abs(e - e0) / std::abs(e0) : std::abs(e - e0);
    csv.row({s.time, e, drift});
    if (c.snapshot_cadence > 0 && step % c.snapshot_cadence == 0) {
      write_snapshot((fs::path(c.output_dir) / snapshot_name(step)).string(), s);
      ++written;
    }
  };
  // on blow-up the rows recorded so far stay in the file
  run_simulation(initial_state(c), opt);
  out << "simulate: " << c.output_dir << "/energy.csv";
  if (written > 0) out << ", " << written << " snapshots";
  out << "\n";
  return kExitOk;
}

int defect(const RunConfig& c, std::ostream& out) {
  if (c.diagnostics.defects.empty()) throw ConfigError("$.diagnostics.defects: no defects requested");
  const DefectFields fields = DefectFields::from_state(analysed_state(c));
  const Grid& grid = fields.u.grid;
  const std::vector<double> ladder =
      c.diagnostics.epsilons.empty() ? default_epsilon_ladder(grid) : c.diagnostics.epsilons;
  validate_ladder(ladder, grid);
  std::vector<DefectSpec> specs;
  for (const auto& label : c.diagnostics.defects) specs.push_back(defect_spec(label));
  XiQuadrature quad;
  quad.radial_nodes = c.diagnostics.radial_nodes;

  const auto series = defect_series(specs, fields, ladder, c.diagnostics.mollifier, quad, c.diagnostics.engine);
  std::ofstream file = open_output(c, "defect.csv");
  CsvWriter csv(file, c.hash, {"label", "epsilon", "value", "slope", "magnitude"});
  for (const auto& s : series) {
    const CsvCell slope = s.slope ? CsvCell(*s.slope) : CsvCell(std::string("degenerate"));
    for (std::size_t i = 0; i < s.epsilons.size(); ++i) {
      csv.row({s.label, s.epsilons[i], s.values[i], slope, s.magnitudes[i]});
    }
    char line[96];
    if (s.slope) {
      std::snprintf(line, sizeof line, "%s slope=%.4f r2=%.4f\n", s.label.c_str(), *s.slope, s.r2);
    } else {
      std::snprintf(line, sizeof line, "%s slope=degenerate\n", s.label.c_str());
    }
    out << line;
  }
  return kExitOk;
}

int structure(const RunConfig& c, std::ostream& out) {
  const ModelState state = analysed_state(c);
  const std::vector<double> radii =
      c.diagnostics.radii.empty() ? default_radii(state.grid()) : c.diagnostics.radii;
  std::ofstream file = open_output(c, "structure.csv");
  CsvWriter csv(file, c.hash, {"p", "r", "value"});
  std::ofstream fit_file = open_output(c, "structure_fit.csv");
  CsvWriter fit_csv(fit_file, c.hash, {"p", "zeta", "s", "r2"});
  for (int p : c.diagnostics.structure_p) {
    const StructureFunctionTable t = structure_function(state.v, p, radii);
    for (std::size_t i = 0; i < t.radii.size(); ++i) csv.row({static_cast<long long>(p), t.radii[i], t.values[i]});
    const BesovEstimate e = besov_exponent_estimate(t, c.diagnostics.fit_window);
    fit_csv.row({static_cast<long long>(p), e.fit.exponent, e.s, e.fit.r2});
    char line[96];
    std::snprintf(line, sizeof line, "p=%d zeta=%.4f s=%.4f r2=%.4f\n", p, e.fit.exponent, e.s, e.fit.r2);
    out << line;
  }
  return kExitOk;
}

int exponents(const std::string& model, std::ostream& out) {
  if (model.empty()) {
    out << threshold_csv();
  } else {
    out << describe_thresholds(model_kind_from_string(model)) << "\n";
  }
  return kExitOk;
}

int verify(const std::string& suite, std::ostream& out) {
  const auto results = run_suite(suite, [&](const CriterionResult& r) { out << format_result(r) << "\n" << std::flush; });
  return verify_exit_code(results);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-spectral lab for inviscid alpha-models", "aol"};
  app.require_subcommand(1);
  std::string config_path, model, suite = "all";

  auto* sim = app.add_subcommand("simulate", "RK4 run: energy CSV and snapshots");
  auto* def = app.add_subcommand("defect", "Defect series over an eps ladder");
  auto* str = app.add_subcommand("structure", "Structure functions and regularity fit");
  for (auto* sub : {sim, def, str}) sub->add_option("--config", config_path, "Config document")->required();
  auto* exp = app.add_subcommand("exponents", "Onsager-type threshold tables");
  exp->add_option("--model", model, "Model name; all rows as CSV when omitted");
  auto* ver = app.add_subcommand("verify", "Acceptance suites");
  ver->add_option("--suite", suite, "all, fast or a single criterion");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*exp) return exponents(model, out);
    if (*ver) return verify(suite, out);
    const RunConfig c = load_config(config_path);
    if (*sim) return simulate(c, out);
    if (*def) return defect(c, out);
    return structure(c, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BlowUpError& e) {
    err << "blow-up at t=" << e.time() << ": " << e.what() << "\n";
    return kExitBlowUp;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_cli(int argc, char** argv) {
  return run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

void keep_freed_memory() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 32 << 20);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
}

}  // namespace aol
