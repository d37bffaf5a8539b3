#include <catch_amalgamated.hpp>

#include <cmath>

#include "aol/errors.hpp"
#include "aol/spectral_ops.hpp"
#include "aol/synthetic.hpp"

using namespace aol;
using Catch::Approx;

namespace {

bool hermitian_planes(const SpectralVectorField& w) {
  // kx = 0 plane: c(0, ky, kz) = conj c(0, -ky, -kz)
  const Grid& g = w.grid;
  const int n = g.n();
  for (int i = 0; i < 3; ++i) {
    for (int kz = -n / 2 + 1; kz < n / 2; ++kz) {
      for (int ky = -n / 2 + 1; ky < n / 2; ++ky) {
        const auto a = w.c[i][static_cast<Eigen::Index>(g.spectral_index(0, ky, kz))];
        const auto b = w.c[i][static_cast<Eigen::Index>(g.spectral_index(0, -ky, -kz))];
        if (std::abs(a - std::conj(b)) > 1e-15) return false;
      }
    }
  }
  return std::abs(w.c[0][0].imag()) == 0.0;
}

}  // namespace

TEST_CASE("taylor green matches its closed form and is solenoidal") {
  const Grid g(16);
  const SpectralVectorField w = generate({SynthKind::taylor_green}, g);
  CHECK(max_divergence(w) == 0.0);
  const RealVectorField r = to_real(w);
  double err = 0.0;
  for (int z = 0; z < 16; ++z) {
    for (int y = 0; y < 16; ++y) {
      for (int x = 0; x < 16; ++x) {
        const double X = g.coordinate(x), Y = g.coordinate(y), Z = g.coordinate(z);
        const auto idx = static_cast<Eigen::Index>(g.real_index(x, y, z));
        err = std::max(err, std::abs(r.c[0][idx] - std::sin(X) * std::cos(Y) * std::cos(Z)));
        err = std::max(err, std::abs(r.c[1][idx] + std::cos(X) * std::sin(Y) * std::cos(Z)));
        err = std::max(err, std::abs(r.c[2][idx]));
      }
    }
  }
  CHECK(err < 1e-14);
}

TEST_CASE("seeded fields are deterministic, solenoidal and Hermitian") {
  const Grid g(16);
  for (SynthKind k : {SynthKind::band_limited_random, SynthKind::power_law_rough}) {
    const SynthSpec spec{k, 0.4, 1, 4, 1.0, 77};
    const SpectralVectorField a = generate(spec, g);
    const SpectralVectorField b = generate(spec, g);
    for (int i = 0; i < 3; ++i) CHECK((a.c[i] == b.c[i]).all());
    CHECK(max_divergence(a) < 1e-12);
    CHECK(hermitian_planes(a));
    SynthSpec other = spec;
    other.seed = 78;
    CHECK(max_abs(generate(other, g) - a) > 1e-3);
  }
}

TEST_CASE("amplitude normalizations") {
  const Grid g(16);
  const SpectralVectorField r = generate({SynthKind::band_limited_random, 0.5, 1, 3, 2.0, 1}, g);
  // rms |v| = 2
  CHECK(norms(r, 0.0).l2_sq / g.volume() == Approx(4.0).epsilon(1e-12));
  const SpectralVectorField p = generate({SynthKind::power_law_rough, 0.5, 1, 4, 1.0, 1}, g);
  CHECK(norms(p, 0.0).l2_sq == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("band limits are respected and checked") {
  const Grid g(16);
  const SpectralVectorField r = generate({SynthKind::band_limited_random, 0.5, 2, 3, 1.0, 1}, g);
  const auto& k2 = g.tables().k2;
  for (int i = 0; i < 3; ++i) {
    CHECK(((k2 < 4.0 || k2 > 9.0) && r.c[i].abs() > 0.0).count() == 0);
  }
  CHECK_THROWS_AS(generate({SynthKind::band_limited_random, 0.5, 1, 6, 1.0, 1}, g), ConfigError);
  CHECK_THROWS_AS(generate({SynthKind::band_limited_random, 0.5, 3, 2, 1.0, 1}, g), ConfigError);
}

TEST_CASE("power law spectral slope") {
  const Grid g(64);
  for (double h : {0.3, 0.7}) {
    const double slope = spectral_slope(generate({SynthKind::power_law_rough, h, 1, 4, 1.0, 5}, g));
    CHECK(std::abs(slope + (2 * h + 3)) <= 0.2);
  }
}

TEST_CASE("seeded generator stream is fixed") {
  SeededRng rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  SeededRng u(1);
  const double x = u.uniform();
  CHECK(x >= 0.0);
  CHECK(x < 1.0);
}
