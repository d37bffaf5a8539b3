#include "dense_oracle.hpp"

#include <cmath>
#include <numbers>

namespace aol::oracle {
namespace {

int wrap(int idx, int n) { return idx < n / 2 ? idx : idx - n; }
int unwrap(int k, int n) { return ((k % n) + n) % n; }

std::size_t flat(int ix, int iy, int iz, int n) {
  return (static_cast<std::size_t>(iz) * n + iy) * n + ix;
}

using Samples = std::vector<double>;

Samples mul(const Samples& a, const Samples& b) {
  Samples out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

void axpy(Samples& y, double s, const Samples& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

std::array<Cube, 3> cubes(const SpectralVectorField& w) {
  return {full_cube(w.grid, w.c[0]), full_cube(w.grid, w.c[1]), full_cube(w.grid, w.c[2])};
}

Cube filtered(const Cube& v, double alpha) {
  Cube u = v;
  for (int iz = 0; iz < v.n; ++iz) {
    for (int iy = 0; iy < v.n; ++iy) {
      for (int ix = 0; ix < v.n; ++ix) {
        const double kx = wrap(ix, v.n), ky = wrap(iy, v.n), kz = wrap(iz, v.n);
        u.c[flat(ix, iy, iz, v.n)] /= 1.0 + alpha * alpha * (kx * kx + ky * ky + kz * kz);
      }
    }
  }
  return u;
}

// (a . grad) b, component j
std::array<Samples, 3> advect(const std::array<Cube, 3>& a, const std::array<Cube, 3>& b) {
  std::array<Samples, 3> a_r;
  for (int i = 0; i < 3; ++i) a_r[i] = synthesize(a[i]);
  std::array<Samples, 3> out;
  for (int j = 0; j < 3; ++j) {
    out[j].assign(a_r[0].size(), 0.0);
    for (int i = 0; i < 3; ++i) axpy(out[j], 1.0, mul(a_r[i], synthesize(b[j], i)));
  }
  return out;
}

std::array<Cube, 3> finish(const std::array<Samples, 3>& n_real, int n) {
  std::array<Cube, 3> out;
  for (int j = 0; j < 3; ++j) {
    out[j] = analyze(n, n_real[j]);
    truncate(out[j]);
  }
  project(out);
  for (auto& comp : out) {
    for (auto& x : comp.c) x = -x;
  }
  return out;
}

}  // namespace

cd Cube::at(int kx, int ky, int kz) const { return c[flat(unwrap(kx, n), unwrap(ky, n), unwrap(kz, n), n)]; }

Cube full_cube(const Grid& grid, const ComplexArray& half) {
  const int n = grid.n();
  const int h = n / 2 + 1;
  Cube out{n, std::vector<cd>(static_cast<std::size_t>(n) * n * n)};
  for (int iz = 0; iz < n; ++iz) {
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        cd value;
        if (ix < h) {
          value = half[static_cast<Eigen::Index>((static_cast<std::size_t>(iz) * n + iy) * h + ix)];
        } else {
          const int jx = unwrap(-wrap(ix, n), n), jy = unwrap(-wrap(iy, n), n), jz = unwrap(-wrap(iz, n), n);
          value = std::conj(half[static_cast<Eigen::Index>((static_cast<std::size_t>(jz) * n + jy) * h + jx)]);
        }
        out.c[flat(ix, iy, iz, n)] = value;
      }
    }
  }
  return out;
}

Samples synthesize(const Cube& cube, int a, int b) {
  const int n = cube.n;
  const double step = 2.0 * std::numbers::pi / n;
  Samples out(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int kz = -n / 2 + 1; kz < n / 2; ++kz) {
    for (int ky = -n / 2 + 1; ky < n / 2; ++ky) {
      for (int kx = -n / 2 + 1; kx < n / 2; ++kx) {
        cd coeff = cube.at(kx, ky, kz);
        if (coeff == cd(0.0)) continue;
        const int k[3] = {kx, ky, kz};
        if (a >= 0) coeff *= cd(0.0, k[a]);
        if (b >= 0) coeff *= cd(0.0, k[b]);
        for (int z = 0; z < n; ++z) {
          for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
              const double phase = step * (kx * x + ky * y + kz * z);
              out[flat(x, y, z, n)] += (coeff * cd(std::cos(phase), std::sin(phase))).real();
            }
          }
        }
      }
    }
  }
  return out;
}

Cube analyze(int n, const Samples& samples) {
  const double step = 2.0 * std::numbers::pi / n;
  const double scale = 1.0 / (static_cast<double>(n) * n * n);
  Cube out{n, std::vector<cd>(static_cast<std::size_t>(n) * n * n)};
  for (int iz = 0; iz < n; ++iz) {
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        const int kx = wrap(ix, n), ky = wrap(iy, n), kz = wrap(iz, n);
        cd acc = 0.0;
        for (int z = 0; z < n; ++z) {
          for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
              const double phase = -step * (kx * x + ky * y + kz * z);
              acc += samples[flat(x, y, z, n)] * cd(std::cos(phase), std::sin(phase));
            }
          }
        }
        out.c[flat(ix, iy, iz, n)] = acc * scale;
      }
    }
  }
  return out;
}

void truncate(Cube& cube) {
  const int n = cube.n;
  for (int iz = 0; iz < n; ++iz) {
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        const int k[3] = {wrap(ix, n), wrap(iy, n), wrap(iz, n)};
        bool keep = true;
        for (int m : k) keep = keep && m != -n / 2 && std::abs(m) <= n / 3;
        if (!keep) cube.c[flat(ix, iy, iz, n)] = 0.0;
      }
    }
  }
}

void project(std::array<Cube, 3>& w) {
  const int n = w[0].n;
  for (int iz = 0; iz < n; ++iz) {
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        const double k[3] = {static_cast<double>(wrap(ix, n)), static_cast<double>(wrap(iy, n)),
                             static_cast<double>(wrap(iz, n))};
        const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        if (k2 == 0.0) continue;
        const std::size_t s = flat(ix, iy, iz, n);
        const cd kw = k[0] * w[0].c[s] + k[1] * w[1].c[s] + k[2] * w[2].c[s];
        for (int i = 0; i < 3; ++i) w[i].c[s] -= k[i] * kw / k2;
      }
    }
  }
}

DenseTendency rhs_oracle(const ModelState& state) {
  const int n = state.grid().n();
  const auto v = cubes(state.v);
  const double alpha = state.kind == ModelKind::euler ? 0.0 : state.filter.alpha;
  std::array<Cube, 3> u;
  for (int i = 0; i < 3; ++i) u[i] = filtered(v[i], alpha);

  DenseTendency out;
  switch (state.kind) {
    case ModelKind::euler:
    case ModelKind::leray_alpha:
      out.dv = finish(advect(u, v), n);
      break;
    case ModelKind::modified_leray_alpha:
      out.dv = finish(advect(v, u), n);
      break;
    case ModelKind::euler_alpha: {
      auto acc = advect(u, v);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) axpy(acc[i], 1.0, mul(synthesize(v[j]), synthesize(u[j], i)));
      }
      out.dv = finish(acc, n);
      break;
    }
    case ModelKind::clark_alpha: {
      auto acc = advect(u, v);
      const auto vu = advect(v, u);
      const auto uu = advect(u, u);
      for (int j = 0; j < 3; ++j) {
        axpy(acc[j], 1.0, vu[j]);
        axpy(acc[j], -1.0, uu[j]);
        for (int l = 0; l < 3; ++l) {
          for (int i = 0; i < 3; ++i) {
            axpy(acc[j], -alpha * alpha, mul(synthesize(u[i], l), synthesize(u[j], l, i)));
          }
        }
      }
      out.dv = finish(acc, n);
      break;
    }
    case ModelKind::mhd_leray_alpha: {
      const auto b = cubes(*state.b);
      auto nv = advect(u, v);
      const auto bb = advect(b, b);
      auto nb = advect(u, b);
      const auto bv = advect(b, v);
      for (int j = 0; j < 3; ++j) {
        axpy(nv[j], -1.0, bb[j]);
        axpy(nb[j], -1.0, bv[j]);
      }
      out.dv = finish(nv, n);
      out.db = finish(nb, n);
      break;
    }
  }
  return out;
}

Cube pressure_oracle(const SpectralVectorField& u_hat, const SpectralVectorField& v_hat) {
  const int n = u_hat.grid.n();
  const auto u = cubes(u_hat);
  const auto v = cubes(v_hat);
  Samples f(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) axpy(f, 1.0, mul(synthesize(u[i], j), synthesize(v[j], i)));
  }
  // lap p = -(d_j u_i)(d_i v_j)
  Cube p = analyze(n, f);
  truncate(p);
  for (int iz = 0; iz < n; ++iz) {
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        const double kx = wrap(ix, n), ky = wrap(iy, n), kz = wrap(iz, n);
        const double k2 = kx * kx + ky * ky + kz * kz;
        cd& c = p.c[flat(ix, iy, iz, n)];
        c = k2 == 0.0 ? cd(0.0) : c / k2;
      }
    }
  }
  return p;
}

}  // namespace aol::oracle
