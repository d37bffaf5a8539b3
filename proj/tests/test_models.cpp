#include <catch_amalgamated.hpp>

#include <cmath>

#include "aol/errors.hpp"
#include "aol/models.hpp"
#include "aol/spectral_ops.hpp"
#include "aol/synthetic.hpp"
#include "dense_oracle.hpp"

using namespace aol;
using Catch::Approx;

namespace {

FilterSpec filter_for(ModelKind k, double alpha) {
  return k == ModelKind::euler ? FilterSpec::identity() : FilterSpec::helmholtz(alpha);
}

ModelState random_state(ModelKind k, const Grid& g, std::uint64_t seed, double alpha = 0.5) {
  const int kmax = g.dealias_cutoff();
  auto v = generate({SynthKind::band_limited_random, 0.5, 1, kmax, 1.0, seed}, g);
  std::optional<SpectralVectorField> b;
  if (carries_magnetic_field(k)) b = generate({SynthKind::band_limited_random, 0.5, 1, kmax, 1.0, seed + 1}, g);
  return ModelState(k, v, filter_for(k, alpha), b);
}

ModelState shear_state(ModelKind k, const Grid& g) {
  const auto v = generate({SynthKind::shear}, g);
  std::optional<SpectralVectorField> b;
  if (carries_magnetic_field(k)) b = SpectralVectorField(g);
  return ModelState(k, v, filter_for(k, 0.7), b);
}

double cube_gap(const oracle::Cube& want, const ComplexArray& half, const Grid& g, double& scale) {
  const oracle::Cube got = oracle::full_cube(g, half);
  double err = 0.0;
  for (std::size_t i = 0; i < want.c.size(); ++i) {
    err = std::max(err, std::abs(want.c[i] - got.c[i]));
    scale = std::max(scale, std::abs(want.c[i]));
  }
  return err;
}

}  // namespace

TEST_CASE("zero state has zero tendency and stays zero") {
  const Grid g(8);
  for (ModelKind k : kAllModels) {
    std::optional<SpectralVectorField> b;
    if (carries_magnetic_field(k)) b = SpectralVectorField(g);
    const ModelState s(k, SpectralVectorField(g), filter_for(k, 0.5), b);
    CHECK(max_abs(rhs(s).dv) == 0.0);
    CHECK(max_abs(step_rk4(s, 0.1).v) == 0.0);
    CHECK(conserved_quantity(s) == 0.0);
  }
}

TEST_CASE("shear flow is steady for every model") {
  const Grid g(16);
  for (ModelKind k : kAllModels) {
    const ModelState s = shear_state(k, g);
    CHECK(max_abs(rhs(s).dv) < 1e-15);
    const ModelState next = step_rk4(s, 0.05);
    CHECK(max_abs(next.v - s.v) < 1e-12);
  }
}

TEST_CASE("tendencies match the dense convective-form oracle") {
  const Grid g(8);
  for (ModelKind k : kAllModels) {
    CAPTURE(to_string(k));
    const ModelState s = random_state(k, g, 31);
    const Tendency t = rhs(s);
    const oracle::DenseTendency want = oracle::rhs_oracle(s);
    double scale = 0.0, err = 0.0;
    for (int i = 0; i < 3; ++i) err = std::max(err, cube_gap(want.dv[i], t.dv.c[i], g, scale));
    if (want.db) {
      for (int i = 0; i < 3; ++i) err = std::max(err, cube_gap((*want.db)[i], t.db->c[i], g, scale));
    }
    CHECK(scale > 1e-2);
    CHECK(err < 1e-10);
  }
}

TEST_CASE("conserved quantity by Parseval") {
  const Grid g(16);
  const double vol = g.volume();
  SpectralVectorField v(g);
  v.c[1][static_cast<Eigen::Index>(g.spectral_index(1, 0, 0))] = {0.0, -0.5};
  CHECK(conserved_quantity(ModelState(ModelKind::leray_alpha, v, FilterSpec::helmholtz(1.0))) ==
        Approx(vol / 2).epsilon(1e-14));
  // u = sin(x) e_y needs v = (1 + |k|^2) u at alpha = 1
  const ModelState ea(ModelKind::euler_alpha, 2.0 * v, FilterSpec::helmholtz(1.0));
  CHECK(conserved_quantity(ea) == Approx(vol).epsilon(1e-14));
}

TEST_CASE("state validation") {
  const Grid g(8);
  const SpectralVectorField v(g);
  CHECK_THROWS_AS(rhs(ModelState(ModelKind::mhd_leray_alpha, v, FilterSpec::helmholtz(0.5))), StateError);
  CHECK_THROWS_AS(rhs(ModelState(ModelKind::leray_alpha, v, FilterSpec::helmholtz(0.5), v)), StateError);
  CHECK_THROWS_AS(step_rk4(ModelState(ModelKind::euler, v, FilterSpec::identity()), 0.0), ConfigError);
}

TEST_CASE("run_simulation") {
  const Grid g(16);
  SECTION("steady shear keeps its energy") {
    for (ModelKind k : kAllModels) {
      SimulationOptions opt;
      opt.dt = 0.01;
      opt.t_end = 0.5;
      opt.cadence = 5;
      const Trajectory t = run_simulation(shear_state(k, g), opt);
      REQUIRE(t.samples.size() == 11);
      for (const auto& s : t.samples) CHECK(std::abs(s.energy - t.samples[0].energy) <= 1e-12 * t.samples[0].energy);
    }
  }
  SECTION("zero field gives a zero series") {
    SimulationOptions opt;
    opt.dt = 0.1;
    opt.t_end = 0.3;
    const Trajectory t = run_simulation(ModelState(ModelKind::leray_alpha, SpectralVectorField(g), FilterSpec::helmholtz(0.5)), opt);
    for (const auto& s : t.samples) CHECK(s.energy == 0.0);
  }
  SECTION("bit-identical reruns") {
    const ModelState s0 = random_state(ModelKind::clark_alpha, g, 3);
    SimulationOptions opt;
    opt.dt = 0.01;
    opt.t_end = 0.1;
    opt.keep_snapshots = true;
    const Trajectory a = run_simulation(s0, opt);
    const Trajectory b = run_simulation(s0, opt);
    for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i].energy == b.samples[i].energy);
    for (int i = 0; i < 3; ++i) CHECK((a.snapshots.back().v.c[i] == b.snapshots.back().v.c[i]).all());
  }
  SECTION("cadence must divide the step count") {
    SimulationOptions opt;
    opt.dt = 0.1;
    opt.t_end = 1.0;
    opt.cadence = 3;
    CHECK_THROWS_AS(run_simulation(shear_state(ModelKind::euler, g), opt), ConfigError);
  }
  SECTION("blow-up is reported with the partial series") {
    SimulationOptions opt;
    opt.dt = 5.0;
    opt.t_end = 50.0;
    const ModelState s = random_state(ModelKind::euler, g, 12);
    try {
      run_simulation(s, opt);
      FAIL("expected a blow-up");
    } catch (const SimulationAborted& e) {
      CHECK(!e.partial().samples.empty());
      CHECK(e.time() > 0.0);
    }
  }
}
