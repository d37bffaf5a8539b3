#include <catch_amalgamated.hpp>

#include <cstdio>

#include "aol/errors.hpp"
#include "aol/residual.hpp"
#include "aol/synthetic.hpp"

using namespace aol;

namespace {

std::vector<ModelState> run(ModelState s, double dt, int count) {
  std::vector<ModelState> out{s};
  for (int i = 1; i < count; ++i) out.push_back(step_rk4(out.back(), dt));
  return out;
}

}  // namespace

TEST_CASE("steady shear has no residual") {
  const Grid g(16);
  const ModelState s(ModelKind::leray_alpha, generate({SynthKind::shear}, g), FilterSpec::helmholtz(0.5));
  const auto r = energy_balance_residual(run(s, 0.1, 4), 0.1, Mollifier(MollifierProfile::bump, 0.6));
  REQUIRE(r.norms.size() == 2);
  CHECK(r.max_norm <= 1e-8);
}

TEST_CASE("zero field has zero residual") {
  const Grid g(16);
  const ModelState s(ModelKind::leray_alpha, SpectralVectorField(g), FilterSpec::helmholtz(0.5));
  CHECK(energy_balance_residual(run(s, 0.1, 3), 0.1, Mollifier(MollifierProfile::bump, 0.6)).max_norm == 0.0);
}

TEST_CASE("residual input checks") {
  const Grid g(16);
  const ModelState s(ModelKind::leray_alpha, generate({SynthKind::taylor_green}, g), FilterSpec::helmholtz(0.5));
  const Mollifier m(MollifierProfile::bump, 0.6);
  CHECK_THROWS_AS(energy_balance_residual(run(s, 0.1, 2), 0.1, m), ConfigError);
  CHECK_THROWS_AS(energy_balance_residual(run(s, 0.1, 3), 0.2, m), ConfigError);
  const ModelState c(ModelKind::clark_alpha, s.v, s.filter);
  CHECK_THROWS_AS(energy_balance_residual(run(c, 0.1, 3), 0.1, m), ConfigError);
}

// The centered difference is second order, so halving dt divides the residual
// by a ratio tending to 4. For this flow the ratio approaches 4 from below
// (3.99..), so the check allows 1% under the asymptotic value.
TEST_CASE("Taylor-Green residual converges at second order in dt") {
  const Grid g(32);
  const ModelState s(ModelKind::leray_alpha, generate({SynthKind::taylor_green}, g), FilterSpec::helmholtz(0.5));
  const Mollifier m(MollifierProfile::bump, 0.3);
  double prev = 0.0;
  for (double dt : {0.2, 0.1, 0.05}) {
    const double r = energy_balance_residual(run(s, dt, 3), dt, m).max_norm;
    if (prev > 0.0) {
      const double ratio = prev / r;
      std::printf("dt %.3f residual %.6e ratio %.4f\n", dt, r, ratio);
      CHECK(ratio >= 4.0 * 0.99);
    }
    prev = r;
  }
}
