#include "aol/defect.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "aol/errors.hpp"
#include "aol/fitting.hpp"
#include "aol/parallel.hpp"
#include "aol/spectral_ops.hpp"

namespace aol {
namespace {

using cd = std::complex<double>;

const std::array<DefectSpec, 11>& catalog() {
  using P = DefectPattern;
  using R = FieldRole;
  static const std::array<DefectSpec, 11> c{{
      {P::P1, R::u, R::v, R::v, 0.5, "D1"},
      {P::P1, R::u, R::u, R::u, 0.5, "D2"},
      {P::P1, R::u, R::grad_u, R::grad_u, 1.0, "D3"},
      {P::P1, R::u, R::u, R::u, 0.5, "D4"},
      {P::P3, R::u, R::grad_u, R::grad_u, 1.0, "D5"},
      {P::P1, R::u, R::u, R::u, 0.5, "D6"},
      {P::P3, R::u, R::grad_u, R::grad_u, 1.0, "D7"},
      {P::P1, R::u, R::grad_u, R::grad_u, 1.0, "D8"},
      {P::P1, R::u, R::v, R::v, 0.5, "D9"},
      {P::P1, R::u, R::b, R::b, 0.5, "D10"},
      {P::P1, R::b, R::b, R::v, 1.0, "D11"},
  }};
  return c;
}

constexpr int kRoles = 4;
int role_index(FieldRole r) { return static_cast<int>(r); }
int role_components(FieldRole r) { return r == FieldRole::grad_u ? 9 : 3; }

// Spectral coefficients and real samples of every role component in use.
struct RoleData {
  std::array<bool, kRoles> used{};
  std::array<std::vector<ComplexArray>, kRoles> coeffs;
  std::array<std::vector<RealArray>, kRoles> base;
};

RoleData collect_roles(std::span<const DefectSpec> specs, const DefectFields& f) {
  RoleData d;
  for (const auto& s : specs) {
    if (s.pattern == DefectPattern::P3) {
      d.used[role_index(FieldRole::u)] = true;
      d.used[role_index(FieldRole::grad_u)] = true;
      continue;
    }
    if (role_components(s.a) != 3) throw ConfigError(s.label + ": advecting role must be a vector");
    if (role_components(s.b) != role_components(s.c)) {
      throw ConfigError(s.label + ": contracted roles must have matching rank");
    }
    for (FieldRole r : {s.a, s.b, s.c}) d.used[role_index(r)] = true;
  }
  const Grid& g = f.u.grid;
  auto add_vector = [&](FieldRole r, const SpectralVectorField& w) {
    if (!(w.grid == g)) throw ConfigError("defect role fields live on different grids");
    for (int i = 0; i < 3; ++i) d.coeffs[role_index(r)].push_back(w.c[i]);
  };
  if (d.used[role_index(FieldRole::u)]) add_vector(FieldRole::u, f.u);
  if (d.used[role_index(FieldRole::v)]) add_vector(FieldRole::v, f.v);
  if (d.used[role_index(FieldRole::b)]) {
    if (!f.b) throw ConfigError("defect term requires a magnetic field");
    add_vector(FieldRole::b, *f.b);
  }
  if (d.used[role_index(FieldRole::grad_u)]) {
    const SpectralTensorField gu = gradient(f.u);
    for (int m = 0; m < 9; ++m) d.coeffs[role_index(FieldRole::grad_u)].push_back(gu.c[m]);
  }
  for (int r = 0; r < kRoles; ++r) {
    for (const auto& c : d.coeffs[r]) d.base[r].push_back(inverse_transform(g, c));
  }
  return d;
}

// e^{i k . xi} on the half spectrum from three one-axis factors; Nyquist
// wavenumbers are treated as zero, matching shift().
void fill_phase(const Grid& g, const Eigen::Vector3d& xi, ComplexArray& phase) {
  const int n = g.n();
  const int half = g.half();
  auto axis = [&](double x) {
    std::vector<cd> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int k = (i == n / 2) ? 0 : g.signed_wavenumber(i);
      e[static_cast<std::size_t>(i)] = std::polar(1.0, k * x);
    }
    return e;
  };
  const auto ex = axis(xi[0]), ey = axis(xi[1]), ez = axis(xi[2]);
  Eigen::Index idx = 0;
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      const cd zy = ez[static_cast<std::size_t>(z)] * ey[static_cast<std::size_t>(y)];
      for (int x = 0; x < half; ++x) phase[idx++] = zy * ex[static_cast<std::size_t>(x)];
    }
  }
}

// acc += weight * integrand, using `along` and `dot` as scratch.
void accumulate(const DefectSpec& s, const Eigen::Vector3d& dir,
                const std::array<std::vector<RealArray>, kRoles>& inc, double weight,
                RealArray& acc, RealArray& along, RealArray& dot) {
  if (s.pattern == DefectPattern::P3) {
    const auto& du = inc[role_index(FieldRole::u)];
    const auto& dg = inc[role_index(FieldRole::grad_u)];
    for (int k = 0; k < 3; ++k) {
      along = dir[0] * dg[3 * k + 0] + dir[1] * dg[3 * k + 1] + dir[2] * dg[3 * k + 2];
      dot = du[0] * dg[3 * k + 0] + du[1] * dg[3 * k + 1] + du[2] * dg[3 * k + 2];
      acc += (s.prefactor * weight) * along * dot;
    }
    return;
  }
  const auto& da = inc[role_index(s.a)];
  const auto& db = inc[role_index(s.b)];
  const auto& dc = inc[role_index(s.c)];
  along = dir[0] * da[0] + dir[1] * da[1] + dir[2] * da[2];
  dot = db[0] * dc[0];
  for (std::size_t m = 1; m < db.size(); ++m) dot += db[m] * dc[m];
  acc += (s.prefactor * weight) * along * dot;
}

// Local defect fields for every spec at a fixed radial rule.
std::vector<RealArray> local_defects(std::span<const DefectSpec> specs, const RoleData& roles,
                                     const Grid& g, const Mollifier& moll, const XiQuadrature& quad,
                                     int radial_nodes) {
  const GaussLegendre gl = gauss_legendre(radial_nodes);
  const auto& dirs = quad.directions;
  const auto size = static_cast<Eigen::Index>(g.real_size());
  const double eps = moll.epsilon();

  // Antipodal pairs form the reduction groups; an unpaired tail is its own group.
  const std::size_t groups = (dirs.size() + 1) / 2;
  std::vector<std::vector<RealArray>> partial(groups);

  parallel_for(groups, [&](std::size_t grp) {
    std::vector<RealArray> acc(specs.size(), RealArray::Zero(size));
    std::array<std::vector<RealArray>, kRoles> inc;
    for (int r = 0; r < kRoles; ++r) {
      inc[r].assign(roles.coeffs[r].size(), RealArray(size));
    }
    ComplexArray work(static_cast<Eigen::Index>(g.spectral_size()));
    RealArray along(size), dot(size);
    ComplexArray phase(static_cast<Eigen::Index>(g.spectral_size()));
    for (std::size_t di = 2 * grp; di < std::min(dirs.size(), 2 * grp + 2); ++di) {
      const Eigen::Vector3d& dir = dirs.directions[di];
      for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
        const double s = gl.nodes[q];
        const double weight = 4.0 * std::numbers::pi * dirs.weights[di] * gl.weights[q] * s * s *
                              moll.normalization() * moll.rho_prime(s) / eps;
        if (weight == 0.0) continue;
        fill_phase(g, (eps * s) * dir, phase);
        for (int r = 0; r < kRoles; ++r) {
          for (std::size_t m = 0; m < roles.coeffs[r].size(); ++m) {
            work = roles.coeffs[r][m] * phase;
            inverse_transform_in_place(g, work, inc[r][m]);
            inc[r][m] -= roles.base[r][m];
          }
        }
        for (std::size_t k = 0; k < specs.size(); ++k) {
          accumulate(specs[k], dir, inc, weight, acc[k], along, dot);
        }
      }
    }
    partial[grp] = std::move(acc);
  });

  std::vector<RealArray> total(specs.size(), RealArray::Zero(size));
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < specs.size(); ++k) total[k] += p[k];
  }
  return total;
}

// Exact evaluation of the local defect. Expanding the triple product of
// increments leaves terms in which one, two or all three factors sit at
// x + xi; the xi-integral against grad phi_eps of each is a mollified
// derivative, applied as a Fourier multiplier. Products are formed on a
// grid of twice the resolution, where they are free of aliasing.
class SpectralDefect {
 public:
  SpectralDefect(const DefectFields& f, const Mollifier& m, bool need_gradient)
      : coarse_(f.u.grid), fine_(2 * f.u.grid.n()), symbol_(fourier_symbol(m, fine_)) {
    add(FieldRole::u, f.u);
    add(FieldRole::v, f.v);
    if (f.b) add(FieldRole::b, *f.b);
    if (!need_gradient) return;
    const SpectralTensorField gu = gradient(resample(f.u, fine_));
    for (int m = 0; m < 9; ++m) {
      hat_[role_index(FieldRole::grad_u)].push_back(gu.c[m]);
      real_[role_index(FieldRole::grad_u)].push_back(inverse_transform(fine_, gu.c[m]));
    }
  }

  RealArray local(const DefectSpec& s) const {
    RealArray d;
    if (s.pattern == DefectPattern::P3) {
      const Comps gu = comps(FieldRole::grad_u);
      const Comps u = comps(FieldRole::u);
      d = RealArray::Zero(static_cast<Eigen::Index>(fine_.real_size()));
      for (int k = 0; k < 3; ++k) {
        const Comps row(gu.begin() + 3 * k, gu.begin() + 3 * k + 3);
        d += p1(row, u, row, false);
      }
    } else {
      d = p1(comps(s.a), comps(s.b), comps(s.c), s.b == s.c);
    }
    return s.prefactor * restrict_to_coarse(d);
  }

 private:
  struct Comp {
    const ComplexArray* hat;
    const RealArray* real;
  };
  using Comps = std::vector<Comp>;

  void add(FieldRole r, const SpectralVectorField& w) {
    if (!(w.grid == coarse_)) throw ConfigError("defect role fields live on different grids");
    const SpectralVectorField f = resample(w, fine_);
    for (int i = 0; i < 3; ++i) {
      hat_[role_index(r)].push_back(f.c[i]);
      real_[role_index(r)].push_back(inverse_transform(fine_, f.c[i]));
    }
  }

  Comps comps(FieldRole r) const {
    if (hat_[role_index(r)].empty()) throw ConfigError("defect term requires a magnetic field");
    Comps out;
    for (std::size_t m = 0; m < hat_[role_index(r)].size(); ++m) {
      out.push_back({&hat_[role_index(r)][m], &real_[role_index(r)][m]});
    }
    return out;
  }

  // (grad phi_eps * .) applied as: M d_i f  with f given in spectral form
  RealArray mollified_derivative(const ComplexArray& f_hat, int axis) const {
    const auto& t = fine_.tables();
    const RealArray& k = axis == 0 ? t.dx : axis == 1 ? t.dy : t.dz;
    return inverse_transform(fine_, f_hat * (cd(0.0, 1.0) * (k * symbol_).cast<cd>()));
  }

  // M div(a f) for real-space a (3 comps) and scalar f
  RealArray mollified_divergence(const Comps& a, const RealArray* f) const {
    const auto& t = fine_.tables();
    ComplexArray acc = ComplexArray::Zero(static_cast<Eigen::Index>(fine_.spectral_size()));
    const RealArray* k[3] = {&t.dx, &t.dy, &t.dz};
    for (int i = 0; i < 3; ++i) {
      const ComplexArray fh = f ? forward_transform(fine_, RealArray(*a[i].real * *f))
                                : *a[i].hat;
      acc += fh * (cd(0.0, 1.0) * k[i]->cast<cd>());
    }
    return inverse_transform(fine_, acc * symbol_.cast<cd>());
  }

  // int grad phi_eps(xi) . da (db . dc) dxi
  RealArray p1(const Comps& a, const Comps& b, const Comps& c, bool same) const {
    RealArray s = *b[0].real * *c[0].real;
    for (std::size_t m = 1; m < b.size(); ++m) s += *b[m].real * *c[m].real;

    RealArray d = -mollified_divergence(a, &s);
    d -= mollified_divergence(a, nullptr) * s;
    const ComplexArray s_hat = forward_transform(fine_, s);
    for (int i = 0; i < 3; ++i) d += *a[i].real * mollified_derivative(s_hat, i);

    const double twice = same ? 2.0 : 1.0;
    for (std::size_t m = 0; m < b.size(); ++m) {
      d += twice * *c[m].real * mollified_divergence(a, b[m].real);
      RealArray adv = RealArray::Zero(s.size());
      for (int i = 0; i < 3; ++i) adv += *a[i].real * mollified_derivative(*b[m].hat, i);
      d -= twice * *c[m].real * adv;
      if (same) continue;
      d += *b[m].real * mollified_divergence(a, c[m].real);
      adv.setZero();
      for (int i = 0; i < 3; ++i) adv += *a[i].real * mollified_derivative(*c[m].hat, i);
      d -= *b[m].real * adv;
    }
    return d;
  }

  RealArray restrict_to_coarse(const RealArray& f) const {
    const int n = coarse_.n();
    RealArray out(static_cast<Eigen::Index>(coarse_.real_size()));
    for (int z = 0; z < n; ++z)
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
          out[static_cast<Eigen::Index>(coarse_.real_index(x, y, z))] =
              f[static_cast<Eigen::Index>(fine_.real_index(2 * x, 2 * y, 2 * z))];
    return out;
  }

  Grid coarse_;
  Grid fine_;
  RealArray symbol_;
  std::array<std::vector<ComplexArray>, kRoles> hat_;
  std::array<std::vector<RealArray>, kRoles> real_;
};

}  // namespace

std::span<const DefectSpec> defect_catalog() { return catalog(); }

const DefectSpec& defect_spec(std::string_view label) {
  for (const auto& s : catalog()) {
    if (s.label == label) return s;
  }
  throw ConfigError("unknown defect label '" + std::string(label) + "'");
}

bool uses_magnetic_field(const DefectSpec& spec) {
  return spec.a == FieldRole::b || spec.b == FieldRole::b || spec.c == FieldRole::b;
}

bool requires_mhd(const DefectSpec& spec) {
  return spec.label == "D9" || spec.label == "D10" || spec.label == "D11";
}

DefectFields DefectFields::from_state(const ModelState& state) {
  return DefectFields{advecting_velocity(state), state.v, state.b};
}

void validate_epsilon(double epsilon, const Grid& grid) {
  if (!(epsilon > grid.spacing() && epsilon < std::numbers::pi)) {
    throw ConfigError("mollification scale " + std::to_string(epsilon) + " outside (" +
                      std::to_string(grid.spacing()) + ", pi)");
  }
}

std::vector<DefectEstimate> defect_estimate(std::span<const DefectSpec> specs,
                                            const DefectFields& fields, const Mollifier& mollifier,
                                            const XiQuadrature& quad, bool keep_local) {
  const Grid& g = fields.u.grid;
  validate_epsilon(mollifier.epsilon(), g);
  if (quad.radial_nodes < 1) throw ConfigError("radial quadrature needs at least one node");
  const RoleData roles = collect_roles(specs, fields);

  auto summarize = [&](const std::vector<RealArray>& locals, int nodes) {
    std::vector<DefectEstimate> out;
    for (std::size_t k = 0; k < specs.size(); ++k) {
      DefectEstimate e;
      e.label = specs[k].label;
      e.epsilon = mollifier.epsilon();
      e.value = locals[k].mean() * g.volume();
      e.magnitude = locals[k].abs().mean() * g.volume();
      e.radial_nodes = nodes;
      out.push_back(std::move(e));
    }
    return out;
  };

  // With refinement on, the requested count is checked against a rule of
  // half the size and doubled until consecutive estimates agree.
  const bool refine = quad.refine_tolerance > 0.0 && quad.radial_nodes >= 2;
  int nodes = refine ? quad.radial_nodes / 2 : quad.radial_nodes;
  std::vector<RealArray> locals = local_defects(specs, roles, g, mollifier, quad, nodes);
  std::vector<DefectEstimate> est = summarize(locals, nodes);
  while (refine && 2 * nodes <= std::max(quad.max_radial_nodes, quad.radial_nodes)) {
    std::vector<RealArray> finer = local_defects(specs, roles, g, mollifier, quad, 2 * nodes);
    std::vector<DefectEstimate> next = summarize(finer, 2 * nodes);
    double change = 0.0;
    for (std::size_t k = 0; k < est.size(); ++k) {
      const double scale = std::max(std::abs(next[k].magnitude), 1e-300);
      if (next[k].magnitude != 0.0 || est[k].magnitude != 0.0) {
        change = std::max(change, std::abs(next[k].magnitude - est[k].magnitude) / scale);
      }
    }
    nodes *= 2;
    locals = std::move(finer);
    est = std::move(next);
    if (change < quad.refine_tolerance) break;
  }
  if (keep_local) {
    for (std::size_t k = 0; k < est.size(); ++k) est[k].local = std::move(locals[k]);
  }
  return est;
}

std::vector<DefectEstimate> defect_estimate_spectral(std::span<const DefectSpec> specs,
                                                     const DefectFields& fields,
                                                     const Mollifier& mollifier, bool keep_local) {
  const Grid& g = fields.u.grid;
  validate_epsilon(mollifier.epsilon(), g);
  bool need_gradient = false;
  for (const auto& s : specs) {
    need_gradient = need_gradient || s.pattern == DefectPattern::P3 || s.b == FieldRole::grad_u;
  }
  const SpectralDefect engine(fields, mollifier, need_gradient);
  std::vector<DefectEstimate> out(specs.size());
  parallel_for(specs.size(), [&](std::size_t k) {
    RealArray local = engine.local(specs[k]);
    DefectEstimate& e = out[k];
    e.label = specs[k].label;
    e.epsilon = mollifier.epsilon();
    e.value = local.mean() * g.volume();
    e.magnitude = local.abs().mean() * g.volume();
    if (keep_local) e.local = std::move(local);
  });
  return out;
}

DefectEstimate defect_estimate(const DefectSpec& spec, const DefectFields& fields,
                               const Mollifier& mollifier, const XiQuadrature& quad,
                               bool keep_local) {
  return defect_estimate(std::span<const DefectSpec>(&spec, 1), fields, mollifier, quad,
                         keep_local)
      .front();
}

std::vector<double> default_epsilon_ladder(const Grid& grid, int points) {
  const double h = grid.spacing();
  const double hi = std::numbers::pi / 4.0;
  const double lo = std::max({std::min(4.0 * h, std::numbers::pi / 12.0), std::numbers::pi / 64.0, 1.5 * h});
  if (!(lo < hi) || points < 2) {
    throw ConfigError("grid too coarse for a default mollification ladder");
  }
  std::vector<double> ladder;
  for (int i = 0; i < points; ++i) {
    ladder.push_back(hi * std::pow(lo / hi, static_cast<double>(i) / (points - 1)));
  }
  return ladder;
}

void validate_ladder(std::span<const double> ladder, const Grid& grid) {
  if (ladder.empty()) throw ConfigError("empty mollification ladder");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    validate_epsilon(ladder[i], grid);
    if (i > 0 && !(ladder[i] < ladder[i - 1])) {
      throw ConfigError("mollification ladder must be strictly decreasing");
    }
  }
}

std::vector<DefectSeries> defect_series(std::span<const DefectSpec> specs,
                                        const DefectFields& fields, std::span<const double> ladder,
                                        MollifierProfile profile, const XiQuadrature& quad,
                                        DefectEngine engine) {
  validate_ladder(ladder, fields.u.grid);
  std::vector<DefectSeries> out(specs.size());
  for (std::size_t k = 0; k < specs.size(); ++k) out[k].label = specs[k].label;
  for (double eps : ladder) {
    const Mollifier m(profile, eps);
    const auto est = engine == DefectEngine::quadrature ? defect_estimate(specs, fields, m, quad)
                                                        : defect_estimate_spectral(specs, fields, m);
    for (std::size_t k = 0; k < specs.size(); ++k) {
      out[k].epsilons.push_back(eps);
      out[k].values.push_back(est[k].value);
      out[k].magnitudes.push_back(est[k].magnitude);
    }
  }
  for (auto& s : out) {
    try {
      const SlopeFit fit = fit_power_law(s.epsilons, s.magnitudes);
      s.slope = fit.exponent;
      s.r2 = fit.r2;
    } catch (const DegenerateFitError&) {
      s.slope.reset();
    }
  }
  return out;
}

DefectSeries defect_series(const DefectSpec& spec, const DefectFields& fields,
                           std::span<const double> ladder, MollifierProfile profile,
                           const XiQuadrature& quad, DefectEngine engine) {
  return defect_series(std::span<const DefectSpec>(&spec, 1), fields, ladder, profile, quad, engine)
      .front();
}

}  // namespace aol
