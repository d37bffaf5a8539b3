#include "aol/grid.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "aol/errors.hpp"

namespace aol {
namespace {

std::shared_ptr<const Grid::Tables> build_tables(int n) {
  auto t = std::make_shared<Grid::Tables>();
  const int h = n / 2 + 1;
  const std::size_t size = static_cast<std::size_t>(n) * n * h;
  const int cutoff = n / 3;
  for (auto* a : {&t->kx, &t->ky, &t->kz, &t->dx, &t->dy, &t->dz, &t->k2, &t->multiplicity,
                  &t->dealias_mask}) {
    a->resize(static_cast<Eigen::Index>(size));
  }
  const auto wave = [n](int idx) { return idx < n / 2 ? idx : idx - n; };
  std::size_t s = 0;
  for (int iz = 0; iz < n; ++iz) {
    const int kz = wave(iz);
    for (int iy = 0; iy < n; ++iy) {
      const int ky = wave(iy);
      for (int ix = 0; ix < h; ++ix, ++s) {
        const int kx = ix == n / 2 ? -n / 2 : ix;
        const bool nyquist = ix == n / 2 || iy == n / 2 || iz == n / 2;
        t->kx[s] = kx;
        t->ky[s] = ky;
        t->kz[s] = kz;
        t->dx[s] = nyquist ? 0.0 : kx;
        t->dy[s] = nyquist ? 0.0 : ky;
        t->dz[s] = nyquist ? 0.0 : kz;
        t->k2[s] = static_cast<double>(kx) * kx + static_cast<double>(ky) * ky +
                   static_cast<double>(kz) * kz;
        t->multiplicity[s] = (ix == 0 || ix == n / 2) ? 1.0 : 2.0;
        const bool inside = !nyquist && std::abs(kx) <= cutoff && std::abs(ky) <= cutoff &&
                            std::abs(kz) <= cutoff;
        t->dealias_mask[s] = inside ? 1.0 : 0.0;
      }
    }
  }
  return t;
}

std::shared_ptr<const Grid::Tables> cached_tables(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Grid::Tables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_tables(n);
  return slot;
}

}  // namespace

Grid::Grid(int n) : n_(n) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw ConfigError("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  tables_ = cached_tables(n);
}

}  // namespace aol
