#include "aol/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aol/defect.hpp"
#include "aol/errors.hpp"
#include "aol/grid.hpp"

namespace aol {
namespace {

using json = nlohmann::json;

// Object view that records which keys were read, so leftovers can be
// reported as unknown.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ConfigError(path_ + ": " + what); }
  std::string child(const std::string& key) const { return path_ + "." + key; }
  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }
  const json& at(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw ConfigError(child(key) + ": missing required key");
    return j_.at(key);
  }

  template <typename T>
  T get(const std::string& key, T fallback) {
    return has(key) ? convert<T>(j_.at(key), child(key)) : fallback;
  }
  template <typename T>
  T require(const std::string& key) {
    return convert<T>(at(key), child(key));
  }

  void reject_unknown() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(child(it.key()) + ": unknown key");
    }
  }

  template <typename T>
  static T convert(const json& v, const std::string& path) {
    try {
      if constexpr (std::is_same_v<T, int>) {
        if (!v.is_number_integer()) throw ConfigError(path + ": expected an integer");
      } else if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) throw ConfigError(path + ": expected a number");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw ConfigError(path + ": expected a string");
      }
      return v.get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename F>
auto located(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    if (msg.rfind("$", 0) == 0) throw;
    throw ConfigError(path + ": " + msg);
  }
}

SynthSpec parse_synth(const json& j, const std::string& path, std::uint64_t seed) {
  Node node(j, path);
  SynthSpec s;
  s.seed = seed;
  s.kind = located(node.child("kind"), [&] {
    return synth_kind_from_string(node.get<std::string>("kind", "band_limited_random"));
  });
  s.h = node.get<double>("h", s.h);
  s.kmin = node.get<int>("kmin", s.kmin);
  s.kmax = node.get<int>("kmax", s.kmax);
  s.amplitude = node.get<double>("amplitude", s.amplitude);
  node.reject_unknown();
  if (s.kmin < 1 || s.kmax < s.kmin) node.fail("need 1 <= kmin <= kmax");
  if (!(s.amplitude >= 0.0)) node.fail("amplitude must be non-negative");
  if (s.kind == SynthKind::power_law_rough && !(s.h > 0.0 && s.h < 1.0)) {
    node.fail("h must lie in (0, 1)");
  }
  return s;
}

std::vector<double> number_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path + ": expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(Node::convert<double>(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

DiagnosticsConfig parse_diagnostics(const json& j, const std::string& path, const RunConfig& run) {
  Node node(j, path);
  DiagnosticsConfig d;
  const Grid grid(run.n);
  if (node.has("defects")) {
    const json& list = node.at("defects");
    if (!list.is_array()) throw ConfigError(node.child("defects") + ": expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = node.child("defects") + "[" + std::to_string(i) + "]";
      const auto label = Node::convert<std::string>(list[i], at);
      const DefectSpec& spec = located(at, [&]() -> const DefectSpec& { return defect_spec(label); });
      if (requires_mhd(spec)) {
        if (!carries_magnetic_field(run.model)) {
          throw ConfigError(at + ": " + label + " requires mhd_leray_alpha");
        }
      }
      d.defects.push_back(label);
    }
  }
  if (node.has("epsilons")) {
    d.epsilons = number_list(node.at("epsilons"), node.child("epsilons"));
    located(node.child("epsilons"), [&] {
      validate_ladder(d.epsilons, grid);
      return 0;
    });
  }
  d.mollifier = located(node.child("mollifier"), [&] {
    return mollifier_profile_from_string(node.get<std::string>("mollifier", "bump"));
  });
  d.radial_nodes = node.get<int>("radial_nodes", d.radial_nodes);
  if (d.radial_nodes < 1) throw ConfigError(node.child("radial_nodes") + ": must be positive");
  if (node.has("structure_p")) {
    d.structure_p.clear();
    const json& list = node.at("structure_p");
    if (!list.is_array()) throw ConfigError(node.child("structure_p") + ": expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = node.child("structure_p") + "[" + std::to_string(i) + "]";
      const int p = Node::convert<int>(list[i], at);
      if (p < 1 || p > 3) throw ConfigError(at + ": order must be 1, 2 or 3");
      d.structure_p.push_back(p);
    }
  }
  if (node.has("radii")) {
    d.radii = number_list(node.at("radii"), node.child("radii"));
    for (std::size_t i = 0; i < d.radii.size(); ++i) {
      if (!(d.radii[i] > 0.0 && d.radii[i] <= std::numbers::pi) ||
          (i > 0 && !(d.radii[i] > d.radii[i - 1]))) {
        throw ConfigError(node.child("radii") + "[" + std::to_string(i) +
                          "]: radii must increase within (0, pi]");
      }
    }
  }
  if (node.has("fit_window")) {
    const auto w = number_list(node.at("fit_window"), node.child("fit_window"));
    if (w.size() != 2 || !(w[0] > 0.0 && w[0] < w[1])) {
      throw ConfigError(node.child("fit_window") + ": expected [lo, hi] with 0 < lo < hi");
    }
    d.fit_window = std::make_pair(w[0], w[1]);
  }
  if (node.has("engine")) {
    const std::string e = node.require<std::string>("engine");
    if (e == "quadrature") {
      d.engine = DefectEngine::quadrature;
    } else if (e == "spectral") {
      d.engine = DefectEngine::spectral;
    } else {
      throw ConfigError(node.child("engine") + ": expected quadrature or spectral");
    }
  }
  if (node.has("snapshot")) d.snapshot = node.require<std::string>("snapshot");
  node.reject_unknown();
  return d;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunConfig parse_config(const std::string& document) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("$: malformed document: ") + e.what());
  }
  Node root(j, "$");
  RunConfig c;
  c.hash = fnv1a_hex(j.dump());

  c.model = located(root.child("model"), [&] {
    return model_kind_from_string(root.require<std::string>("model"));
  });
  c.n = root.require<int>("n");
  located(root.child("n"), [&] { return Grid(c.n).n(); });
  c.seed = root.get<std::uint64_t>("seed", 0);
  c.alpha = root.get<double>("alpha", c.model == ModelKind::euler ? 0.0 : 0.5);
  if (!(c.alpha >= 0.0)) throw ConfigError(root.child("alpha") + ": must be non-negative");

  c.filter = c.model == ModelKind::euler ? FilterSpec::identity() : FilterSpec::helmholtz(c.alpha);
  if (root.has("filter")) {
    Node f(root.at("filter"), root.child("filter"));
    const auto kind = located(f.child("kind"), [&] {
      return filter_kind_from_string(f.get<std::string>("kind", to_string(c.filter.kind)));
    });
    const double theta = f.get<double>("theta", 1.0);
    f.reject_unknown();
    if (c.model == ModelKind::euler && kind != FilterKind::identity) {
      f.fail("euler requires the identity filter");
    }
    if (kind == FilterKind::fractional && c.model != ModelKind::leray_alpha) {
      f.fail("the fractional filter is only defined for leray_alpha");
    }
    if (c.model != ModelKind::euler && kind == FilterKind::identity) {
      f.fail(std::string(to_string(c.model)) + " requires a smoothing filter");
    }
    c.filter = kind == FilterKind::identity    ? FilterSpec::identity()
               : kind == FilterKind::helmholtz ? FilterSpec::helmholtz(c.alpha)
                                               : FilterSpec::fractional(c.alpha, theta);
    located(root.child("filter"), [&] {
      validate(c.filter);
      return 0;
    });
  }

  c.init.seed = c.seed;
  c.init.kind = SynthKind::band_limited_random;
  if (root.has("init")) c.init = parse_synth(root.at("init"), root.child("init"), c.seed);
  if (root.has("init_b")) {
    if (!carries_magnetic_field(c.model)) {
      throw ConfigError(root.child("init_b") + ": magnetic field requires mhd_leray_alpha");
    }
    c.init_b = parse_synth(root.at("init_b"), root.child("init_b"), c.seed + 1);
  } else if (carries_magnetic_field(c.model)) {
    c.init_b = c.init;
    c.init_b->seed = c.seed + 1;
  }
  for (const char* key : {"init", "init_b"}) {
    const SynthSpec& spec = std::string(key) == "init" ? c.init : (c.init_b ? *c.init_b : c.init);
    if (spec.kind == SynthKind::band_limited_random && spec.kmax > Grid(c.n).dealias_cutoff()) {
      throw ConfigError(root.child(key) + ".kmax: exceeds the dealias cutoff " +
                        std::to_string(Grid(c.n).dealias_cutoff()));
    }
  }

  c.dt = root.get<double>("dt", c.dt);
  c.t_end = root.get<double>("t_end", c.t_end);
  if (!(c.dt > 0.0)) throw ConfigError(root.child("dt") + ": must be positive");
  if (!(c.t_end >= 0.0)) throw ConfigError(root.child("t_end") + ": must be non-negative");
  const double steps = c.t_end / c.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw ConfigError(root.child("t_end") + ": must be a whole number of steps dt");
  }
  const long total = std::lround(steps);
  c.snapshot_cadence = root.get<int>("snapshot_cadence", 0);
  c.energy_cadence = root.get<int>("energy_cadence", 1);
  if (c.snapshot_cadence < 0) throw ConfigError(root.child("snapshot_cadence") + ": must be >= 0");
  if (c.energy_cadence < 1 || (total > 0 && total % c.energy_cadence != 0)) {
    throw ConfigError(root.child("energy_cadence") + ": must divide the step count");
  }
  if (c.snapshot_cadence > 0 && c.snapshot_cadence % c.energy_cadence != 0) {
    throw ConfigError(root.child("snapshot_cadence") + ": must be a multiple of energy_cadence");
  }

  if (root.has("diagnostics")) {
    c.diagnostics = parse_diagnostics(root.at("diagnostics"), root.child("diagnostics"), c);
  }
  c.output_dir = root.get<std::string>("output_dir", c.output_dir);
  root.reject_unknown();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ModelState initial_state(const RunConfig& config) {
  const Grid grid(config.n);
  std::optional<SpectralVectorField> b;
  if (config.init_b) b = generate(*config.init_b, grid);
  return ModelState(config.model, generate(config.init, grid), config.filter, std::move(b));
}

}  // namespace aol
