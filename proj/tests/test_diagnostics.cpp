#include <catch_amalgamated.hpp>

#include <atomic>
#include <cmath>
#include <numbers>

#include "aol/defect.hpp"
#include "aol/errors.hpp"
#include "aol/fitting.hpp"
#include "aol/parallel.hpp"
#include "aol/spectral_ops.hpp"
#include "aol/structure.hpp"
#include "aol/synthetic.hpp"
#include "aol/verify.hpp"

using namespace aol;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralVectorField constant_field(const Grid& g, double a, double b, double c) {
  SpectralVectorField w(g);
  w.c[0][0] = a;
  w.c[1][0] = b;
  w.c[2][0] = c;
  return w;
}

SpectralVectorField sin_x_ey(const Grid& g) {
  SpectralVectorField w(g);
  w.c[1][static_cast<Eigen::Index>(g.spectral_index(1, 0, 0))] = {0.0, -0.5};
  return w;
}

SpectralVectorField random_field(const Grid& g, std::uint64_t seed, int kmax = 2) {
  return generate({SynthKind::band_limited_random, 0.5, 1, kmax, 1.0, seed}, g);
}

DefectFields leray_roles(const SpectralVectorField& v, double alpha) {
  return {apply_inverse_filter(FilterSpec::helmholtz(alpha), v), v, std::nullopt};
}

}  // namespace

TEST_CASE("gauss legendre nodes") {
  const GaussLegendre gl = gauss_legendre(16);
  double w = 0.0, x30 = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    CHECK(gl.nodes[i] > 0.0);
    CHECK(gl.nodes[i] < 1.0);
    w += gl.weights[i];
    x30 += gl.weights[i] * std::pow(gl.nodes[i], 30);
  }
  // mapped to (0, 1)
  CHECK(w == Approx(1.0).epsilon(1e-14));
  CHECK(x30 == Approx(1.0 / 31.0).epsilon(1e-13));
}

TEST_CASE("stencil directions integrate quartics over the sphere") {
  const DirectionSet d = DirectionSet::stencil26();
  REQUIRE(d.size() == 26);
  double w = 0.0, x4 = 0.0, x2y2 = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    w += d.weights[i];
    x4 += d.weights[i] * std::pow(d.directions[i].x(), 4);
    x2y2 += d.weights[i] * std::pow(d.directions[i].x() * d.directions[i].y(), 2);
    if (i % 2 == 1) CHECK((d.directions[i] + d.directions[i - 1]).norm() < 1e-15);
  }
  CHECK(w == Approx(1.0).epsilon(1e-14));
  CHECK(x4 == Approx(0.2).epsilon(1e-14));
  CHECK(x2y2 == Approx(1.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("mollifier normalization and transform") {
  for (MollifierProfile p : {MollifierProfile::bump, MollifierProfile::polynomial}) {
    const Mollifier m(p, 0.5);
    CHECK(m.mass() == Approx(1.0).epsilon(1e-10));
    CHECK(m.fourier(0.0) == Approx(1.0).epsilon(1e-10));
    CHECK(m.value({0.6, 0.0, 0.0}) == 0.0);
    // radial transform by a plain midpoint rule
    const double k = 3.0;
    double direct = 0.0;
    const int steps = 200000;
    for (int i = 0; i < steps; ++i) {
      const double r = (i + 0.5) * 0.5 / steps;
      direct += 4 * kPi * r * r * m.value({r, 0.0, 0.0}) * std::sin(k * r) / (k * r) * (0.5 / steps);
    }
    CHECK(m.fourier(k) == Approx(direct).epsilon(1e-8));
  }
  CHECK_THROWS_AS(Mollifier(MollifierProfile::bump, 0.0), ConfigError);
}

TEST_CASE("power law fits") {
  const std::vector<double> r{0.1, 0.2, 0.4, 0.8};
  std::vector<double> v;
  for (double x : r) v.push_back(3.0 * std::pow(x, 1.5));
  const SlopeFit f = fit_power_law(r, v);
  CHECK(f.exponent == Approx(1.5).epsilon(1e-13));
  CHECK(f.r2 == Approx(1.0).epsilon(1e-12));
  const std::vector<double> flat(4, 2.0);
  CHECK(std::abs(fit_power_law(r, flat).exponent) < 1e-14);
  const std::vector<double> zero(4, 0.0);
  CHECK_THROWS_AS(fit_power_law(r, zero), DegenerateFitError);
  CHECK(fit_power_law(r, v, {0.15, 0.5}).points == 2);
}

TEST_CASE("defect catalog") {
  REQUIRE(defect_catalog().size() == 11);
  CHECK(defect_spec("D7").label == "D7");
  CHECK_THROWS_AS(defect_spec("D12"), ConfigError);
  for (const auto& s : defect_catalog()) {
    const int k = std::stoi(s.label.substr(1));
    CHECK(requires_mhd(s) == (k >= 9));
  }
}

TEST_CASE("defect of constant fields and of constant v vanishes") {
  const Grid g(8);
  const SpectralVectorField c = constant_field(g, 0.3, -1.0, 2.0);
  const DefectFields consts{c, c, c};
  const Mollifier m(MollifierProfile::bump, 0.8);
  for (const auto& e : defect_estimate(defect_catalog(), consts, m, XiQuadrature{})) {
    CHECK(e.value == 0.0);
    CHECK(e.magnitude == 0.0);
  }
  const DefectFields d1{random_field(g, 4), c, std::nullopt};
  CHECK(std::abs(defect_estimate(defect_spec("D1"), d1, m, XiQuadrature{}).value) < 1e-14);
  CHECK(std::abs(defect_estimate_spectral(std::vector{defect_spec("D1")}, d1, m)[0].value) < 1e-14);
}

TEST_CASE("epsilon must lie between the grid spacing and pi") {
  const Grid g(8);
  const DefectFields f = oracle_fields();
  CHECK_THROWS_AS(defect_estimate(defect_spec("D1"), f, Mollifier(MollifierProfile::bump, 0.5), XiQuadrature{}),
                  ConfigError);
  CHECK_THROWS_AS(defect_estimate(defect_spec("D1"), f, Mollifier(MollifierProfile::bump, 3.2), XiQuadrature{}),
                  ConfigError);
  const DefectFields no_b{f.u, f.v, std::nullopt};
  CHECK_THROWS_AS(defect_estimate(defect_spec("D10"), no_b, Mollifier(MollifierProfile::bump, 0.8), XiQuadrature{}),
                  ConfigError);
}

TEST_CASE("quadrature and spectral engines agree on the oracle fields") {
  const DefectFields f = oracle_fields();
  const Mollifier m(MollifierProfile::bump, kOracleEpsilon);
  const auto q = defect_estimate(defect_catalog(), f, m, XiQuadrature{}, true);
  const auto s = defect_estimate_spectral(defect_catalog(), f, m, true);
  for (std::size_t k = 0; k < q.size(); ++k) {
    CAPTURE(q[k].label);
    CHECK(q[k].value == Approx(s[k].value).epsilon(0.01));
    CHECK(q[k].magnitude == Approx(s[k].magnitude).epsilon(0.01));
    REQUIRE(q[k].local.size() == static_cast<Eigen::Index>(f.u.grid.real_size()));
    // the local density integrates to the reported value
    CHECK(q[k].local.mean() * f.u.grid.volume() == Approx(q[k].value).epsilon(1e-12));
  }
}

TEST_CASE("defect estimates are bit-identical across runs") {
  const DefectFields f = oracle_fields();
  const Mollifier m(MollifierProfile::polynomial, 0.9);
  const auto a = defect_estimate(defect_catalog(), f, m, XiQuadrature{});
  const auto b = defect_estimate(defect_catalog(), f, m, XiQuadrature{});
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].value == b[k].value);
}

TEST_CASE("defect series") {
  const Grid g(16);
  SECTION("constant field is degenerate") {
    const SpectralVectorField c = constant_field(g, 1.0, 0.0, 0.0);
    const DefectSeries s = defect_series(defect_spec("D1"), DefectFields{c, c, std::nullopt},
                                         default_epsilon_ladder(g), MollifierProfile::bump, XiQuadrature{});
    CHECK(s.degenerate());
    for (double v : s.values) CHECK(v == 0.0);
  }
  SECTION("smooth band-limited field vanishes like eps^2") {
    const Grid fine(32);
    const DefectFields f = leray_roles(random_field(fine, 6), 0.5);
    for (DefectEngine e : {DefectEngine::quadrature, DefectEngine::spectral}) {
      const DefectSeries s = defect_series(defect_spec("D1"), f, default_epsilon_ladder(fine),
                                           MollifierProfile::bump, XiQuadrature{}, e);
      REQUIRE(s.slope);
      CHECK(*s.slope >= 1.7);
    }
  }
  SECTION("ladder validation") {
    const std::vector<double> rising{0.5, 0.7};
    CHECK_THROWS_AS(validate_ladder(rising, g), ConfigError);
    const std::vector<double> ladder = default_epsilon_ladder(g);
    CHECK(ladder.size() == 8);
    CHECK(ladder.front() == Approx(kPi / 4));
    CHECK_NOTHROW(validate_ladder(ladder, g));
  }
}

TEST_CASE("increments") {
  const Grid g(16);
  const RealVectorField zero = increment(constant_field(g, 1.0, 2.0, 3.0), {0.4, 0.1, -0.2});
  for (int i = 0; i < 3; ++i) CHECK(zero.c[i].abs().maxCoeff() < 1e-15);
  const RealVectorField none = increment(random_field(g, 3), Eigen::Vector3d::Zero());
  for (int i = 0; i < 3; ++i) CHECK(none.c[i].abs().maxCoeff() == 0.0);
  const RealVectorField d = increment(sin_x_ey(g), {kPi, 0.0, 0.0});
  double err = 0.0;
  for (int x = 0; x < 16; ++x) {
    err = std::max(err, std::abs(d.c[1][static_cast<Eigen::Index>(g.real_index(x, 2, 9))] + 2 * std::sin(g.coordinate(x))));
  }
  CHECK(err < 1e-12);
}

TEST_CASE("structure functions") {
  const Grid g(16);
  const std::vector<double> radii{0.1, 0.5, 1.3, kPi};
  SECTION("constant field") {
    const auto t = structure_function(constant_field(g, 1.0, 1.0, 0.0), 2, radii);
    for (double v : t.values) CHECK(v < 1e-28);
  }
  SECTION("sin(x) e_y along x") {
    const auto t = structure_function(sin_x_ey(g), 2, radii, DirectionSet::single({1.0, 0.0, 0.0}));
    for (std::size_t i = 0; i < radii.size(); ++i) CHECK(t.values[i] == Approx(1.0 - std::cos(radii[i])).epsilon(1e-12));
  }
  SECTION("moments are ordered by Hoelder") {
    const SpectralVectorField w = random_field(g, 13, 5);
    const auto s1 = structure_function(w, 1, radii);
    const auto s2 = structure_function(w, 2, radii);
    const auto s3 = structure_function(w, 3, radii);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      CHECK(s1.values[i] <= std::sqrt(s2.values[i]) * (1 + 1e-12));
      CHECK(std::sqrt(s2.values[i]) <= std::cbrt(s3.values[i]) * (1 + 1e-12));
    }
  }
  SECTION("argument checks") {
    const SpectralVectorField w = random_field(g, 1);
    CHECK_THROWS_AS(structure_function(w, 4, radii), ConfigError);
    const std::vector<double> bad{0.0, 1.0};
    CHECK_THROWS_AS(structure_function(w, 2, bad), ConfigError);
  }
}

TEST_CASE("besov exponent fits") {
  StructureFunctionTable t;
  t.p = 3;
  t.radii = geometric_radii(0.05, 1.0, 8);
  for (double r : t.radii) t.values.push_back(std::pow(r, 3 * 0.4));
  const BesovEstimate e = besov_exponent_estimate(t);
  CHECK(e.fit.exponent == Approx(1.2).epsilon(1e-12));
  CHECK(e.s == Approx(0.4).epsilon(1e-12));
  t.values.assign(t.radii.size(), 0.7);
  CHECK(std::abs(besov_exponent_estimate(t).fit.exponent) < 1e-14);
  t.values.assign(t.radii.size(), 0.0);
  CHECK_THROWS_AS(besov_exponent_estimate(t), DegenerateFitError);
}

TEST_CASE("power law rough field with h = 0.5 has s near 0.5") {
  const SpectralVectorField w = generate({SynthKind::power_law_rough, 0.5, 1, 4, 1.0, 2}, Grid(64));
  const double s = besov_exponent_estimate(w).s;
  CHECK(s >= 0.35);
  CHECK(s <= 0.65);
}

TEST_CASE("sigma probe") {
  const Grid g(16);
  SECTION("constant fields") {
    const SpectralVectorField c = constant_field(g, 1.0, 0.0, 2.0);
    const std::vector<double> radii{0.1, 0.2, 0.4, 0.8};
    const SigmaProbe p = sigma_probe(c, c, c, radii);
    for (double s : p.sigma) CHECK(s < 1e-28);
    CHECK(p.trend);
  }
  SECTION("smooth Leray roles scale like r^2") {
    const SpectralVectorField v = random_field(g, 17);
    const SpectralVectorField u = apply_inverse_filter(FilterSpec::helmholtz(0.5), v);
    const std::vector<double> radii = geometric_radii(0.01, 0.08, 6);
    const SigmaProbe p = sigma_probe(u, v, v, radii);
    CHECK(p.trend);
    CHECK(fit_power_law(radii, p.sigma).exponent == Approx(2.0).margin(0.05));
  }
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK(worker_count() >= 1);
}
