#include "aol/synthetic.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "aol/errors.hpp"
#include "aol/fitting.hpp"
#include "aol/spectral_ops.hpp"

namespace aol {
namespace {

using cd = std::complex<double>;

// Canonical half of the lattice: kx > 0, or kx == 0 and (ky, kz) lexicographically positive.
bool canonical(int kx, int ky, int kz) {
  if (kx != 0) return kx > 0;
  if (ky != 0) return ky > 0;
  return kz > 0;
}

// Writes c at k and, when k lies on the kx = 0 plane, conj(c) at -k.
void put(SpectralVectorField& w, int kx, int ky, int kz, const Eigen::Vector3cd& c) {
  const Grid& g = w.grid;
  const auto s = static_cast<Eigen::Index>(g.spectral_index(kx, ky, kz));
  for (int i = 0; i < 3; ++i) w.c[i][s] = c[i];
  if (kx == 0) {
    const auto m = static_cast<Eigen::Index>(g.spectral_index(0, -ky, -kz));
    for (int i = 0; i < 3; ++i) w.c[i][m] = std::conj(c[i]);
  }
}

SpectralVectorField taylor_green(const Grid& g, double amp) {
  SpectralVectorField w(g);
  // sin x cos y cos z -> -i sx / 8 ; -cos x sin y cos z -> i sy / 8 at k = (sx, sy, sz)
  for (int sx = -1; sx <= 1; sx += 2) {
    for (int sy = -1; sy <= 1; sy += 2) {
      for (int sz = -1; sz <= 1; sz += 2) {
        if (sx < 0) continue;  // stored half; conjugates implied
        const auto s = static_cast<Eigen::Index>(g.spectral_index(sx, sy, sz));
        w.c[0][s] = amp * cd(0.0, -sx / 8.0);
        w.c[1][s] = amp * cd(0.0, sy / 8.0);
      }
    }
  }
  w.divergence_free = true;
  return w;
}

SpectralVectorField shear(const Grid& g, double amp) {
  SpectralVectorField w(g);
  put(w, 0, 1, 0, Eigen::Vector3cd(cd(0.0, -0.5 * amp), 0.0, 0.0));
  w.divergence_free = true;
  return w;
}

template <class Fn>
void for_each_canonical_in_ball(const Grid& g, int kmin, int kmax, Fn&& fn) {
  for (int kz = -kmax; kz <= kmax; ++kz) {
    for (int ky = -kmax; ky <= kmax; ++ky) {
      for (int kx = 0; kx <= kmax; ++kx) {
        if (!canonical(kx, ky, kz)) continue;
        const double k2 = static_cast<double>(kx * kx + ky * ky + kz * kz);
        if (k2 < static_cast<double>(kmin) * kmin || k2 > static_cast<double>(kmax) * kmax) continue;
        fn(kx, ky, kz);
      }
    }
  }
  (void)g;
}

SpectralVectorField band_limited(const SynthSpec& spec, const Grid& g) {
  SpectralVectorField w(g);
  SeededRng rng(spec.seed);
  for_each_canonical_in_ball(g, spec.kmin, spec.kmax, [&](int kx, int ky, int kz) {
    Eigen::Vector3cd c;
    for (int i = 0; i < 3; ++i) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      c[i] = cd(re, im) * std::sqrt(0.5);
    }
    put(w, kx, ky, kz, c);
  });
  w = leray_project(w);
  const double ms = norms(w, 0.0).l2_sq / g.volume();
  if (ms > 0.0) w *= spec.amplitude / std::sqrt(ms);
  return w;
}

SpectralVectorField power_law(const SynthSpec& spec, const Grid& g) {
  SpectralVectorField w(g);
  SeededRng rng(spec.seed);
  const double expo = -(spec.h + 1.5);
  for_each_canonical_in_ball(g, 1, g.dealias_cutoff(), [&](int kx, int ky, int kz) {
    const Eigen::Vector3d k(kx, ky, kz);
    const Eigen::Vector3d khat = k.normalized();
    // least-aligned axis gives a well-conditioned transverse pair
    Eigen::Index axis = 0;
    khat.cwiseAbs().minCoeff(&axis);
    const Eigen::Vector3d e1 = khat.cross(Eigen::Vector3d::Unit(axis)).normalized();
    const Eigen::Vector3d e2 = khat.cross(e1);
    const double mag = std::pow(k.norm(), expo);
    const double p1 = kTwoPi * rng.uniform();
    const double p2 = kTwoPi * rng.uniform();
    const Eigen::Vector3cd c =
        (mag / std::sqrt(2.0)) * (std::polar(1.0, p1) * e1.cast<cd>() + std::polar(1.0, p2) * e2.cast<cd>());
    put(w, kx, ky, kz, c);
  });
  w = leray_project(w);
  const double l2 = std::sqrt(norms(w, 0.0).l2_sq);
  if (l2 > 0.0) w *= spec.amplitude / l2;
  return w;
}

}  // namespace

double SeededRng::gaussian() noexcept {
  double u1 = uniform();
  const double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

const char* to_string(SynthKind kind) {
  switch (kind) {
    case SynthKind::taylor_green: return "taylor_green";
    case SynthKind::band_limited_random: return "band_limited_random";
    case SynthKind::power_law_rough: return "power_law_rough";
    case SynthKind::shear: return "shear";
  }
  return "taylor_green";
}

SynthKind synth_kind_from_string(const std::string& name) {
  if (name == "taylor_green") return SynthKind::taylor_green;
  if (name == "band_limited_random") return SynthKind::band_limited_random;
  if (name == "power_law_rough") return SynthKind::power_law_rough;
  if (name == "shear") return SynthKind::shear;
  throw ConfigError("unknown initial field kind '" + name + "'");
}

SpectralVectorField generate(const SynthSpec& spec, const Grid& grid) {
  switch (spec.kind) {
    case SynthKind::taylor_green:
      return taylor_green(grid, spec.amplitude);
    case SynthKind::shear:
      return shear(grid, spec.amplitude);
    case SynthKind::band_limited_random:
      if (spec.kmin < 1 || spec.kmax < spec.kmin || spec.kmax > grid.dealias_cutoff()) {
        throw ConfigError("band [" + std::to_string(spec.kmin) + ", " + std::to_string(spec.kmax) +
                          "] outside [1, " + std::to_string(grid.dealias_cutoff()) + "]");
      }
      return band_limited(spec, grid);
    case SynthKind::power_law_rough:
      if (!(spec.h > 0.0 && spec.h < 1.0)) {
        throw ConfigError("Hoelder exponent h must lie in (0, 1)");
      }
      return power_law(spec, grid);
  }
  throw ConfigError("unknown synthetic kind");
}

double spectral_slope(const SpectralVectorField& w) {
  const Grid& g = w.grid;
  const auto& t = g.tables();
  const int kc = g.dealias_cutoff();
  std::vector<double> sum(static_cast<std::size_t>(kc) + 1, 0.0);
  std::vector<double> count(sum.size(), 0.0);
  const RealArray e = w.c[0].abs2() + w.c[1].abs2() + w.c[2].abs2();
  for (Eigen::Index s = 0; s < e.size(); ++s) {
    const long shell = std::lround(std::sqrt(t.k2[s]));
    if (shell < 1 || shell > kc || t.dealias_mask[s] == 0.0) continue;
    sum[static_cast<std::size_t>(shell)] += t.multiplicity[s] * e[s];
    count[static_cast<std::size_t>(shell)] += t.multiplicity[s];
  }
  std::vector<double> ks, vals;
  for (int k = 1; k <= kc; ++k) {
    if (count[static_cast<std::size_t>(k)] > 0.0) {
      ks.push_back(k);
      vals.push_back(sum[static_cast<std::size_t>(k)] / count[static_cast<std::size_t>(k)]);
    }
  }
  return fit_power_law(ks, vals).exponent;
}

}  // namespace aol
