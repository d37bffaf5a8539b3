#include <catch_amalgamated.hpp>

#include "aol/defect.hpp"
#include "aol/verify.hpp"
#include "defect_oracle.hpp"

using namespace aol;

TEST_CASE("bump normalization agrees with the library mollifier") {
  const Mollifier m(MollifierProfile::bump, 1.0);
  CHECK(m.normalization() == Catch::Approx(oracle::bump_normalization()).epsilon(1e-9));
}

// Recomputes the 48^3 lattice oracle (about half a minute) and checks that the
// frozen values, and both defect engines, agree with it.
TEST_CASE("lattice oracle reproduces the frozen values") {
  const DefectFields f = oracle_fields();
  const auto fresh = oracle::brute_force_defects(f, kOracleEpsilon, 48);
  const auto& frozen = frozen_oracle_values();
  const Mollifier m(MollifierProfile::bump, kOracleEpsilon);
  const auto quad = defect_estimate(defect_catalog(), f, m, XiQuadrature{});
  const auto spec = defect_estimate_spectral(defect_catalog(), f, m);
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    CAPTURE(k + 1);
    CHECK(fresh[k] == Catch::Approx(frozen[k]).epsilon(1e-12));
    CHECK(quad[k].value == Catch::Approx(fresh[k]).epsilon(0.01));
    CHECK(spec[k].value == Catch::Approx(fresh[k]).epsilon(0.01));
  }
}
