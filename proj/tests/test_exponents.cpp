#include <catch_amalgamated.hpp>

#include "aol/errors.hpp"
#include "aol/exponents.hpp"

using namespace aol;
using R = Rational;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(R(2, 4) == R(1, 2));
  CHECK(R(1, -3) == R(-1, 3));
  CHECK(R(1, 3) + R(1, 6) == R(1, 2));
  CHECK(R(1) - R(2) * R(1, 4) == R(1, 2));
  CHECK(R(1, 2) / R(3) == R(1, 6));
  CHECK(R(1, 3) < R(1, 2));
  CHECK(R(-1, 2).to_string() == "-1/2");
  CHECK(R(0, 5).to_string() == "0");
  CHECK_THROWS(R(1, 0));
}

TEST_CASE("besov thresholds") {
  CHECK(onsager_besov_threshold(ModelKind::leray_alpha).s.value == R(0));
  CHECK(onsager_besov_threshold(ModelKind::euler_alpha).s.value == R(1));
  CHECK(onsager_besov_threshold(ModelKind::modified_leray_alpha).s.value == R(1));
  CHECK(onsager_besov_threshold(ModelKind::clark_alpha).s.value == R(1));
  CHECK(onsager_besov_threshold(ModelKind::euler).s.value == R(1, 3));
  const BesovThreshold m = onsager_besov_threshold(ModelKind::mhd_leray_alpha);
  CHECK(m.s.value == R(0));
  REQUIRE(m.r);
  CHECK(m.r->value == R(0));
  REQUIRE(m.s_plus_2r);
  CHECK(m.s_plus_2r->value == R(1));
  for (const auto& e : threshold_table()) CHECK(e.besov.s.exclusive);
}

TEST_CASE("sobolev thresholds") {
  const SobolevThreshold l = onsager_sobolev_threshold(ModelKind::leray_alpha);
  CHECK(l.v.value == R(1, 2));
  REQUIRE(l.u);
  CHECK(l.u->value == R(5, 2));
  const SobolevThreshold e = onsager_sobolev_threshold(ModelKind::euler);
  CHECK(e.v.value == R(5, 6));
  CHECK(!e.u);
  const SobolevThreshold c = onsager_sobolev_threshold(ModelKind::clark_alpha);
  REQUIRE(c.u);
  CHECK(c.u->value == R(3, 2));
  CHECK(c.v.value == R(-1, 2));
  const SobolevThreshold m = onsager_sobolev_threshold(ModelKind::mhd_leray_alpha);
  CHECK(m.v.value == R(1, 2));
  REQUIRE(m.b);
  CHECK(m.b->value == R(1, 2));
  REQUIRE(m.v_plus_2b);
  CHECK(m.v_plus_2b->value == R(5, 2));
}

TEST_CASE("fractional exponent law") {
  CHECK(fractional_onsager_limit() == R(1, 3));
  CHECK(fractional_onsager_exponent(R(1, 4)).gamma == R(1, 6));
  const FractionalExponent half = fractional_onsager_exponent(R(1, 2));
  CHECK(half.gamma == R(0));
  CHECK(fractional_onsager_exponent(R(3, 4)).at_most);
  CHECK(fractional_onsager_exponent(R(3, 4)).gamma == R(0));
  CHECK(fractional_onsager_exponent(0.25) == Catch::Approx(1.0 / 6.0));
  // 3 gamma + 2 theta = 1
  for (int d = 3; d <= 20; ++d) {
    const R theta(1, d);
    CHECK(R(3) * fractional_onsager_exponent(theta).gamma + R(2) * theta == R(1));
  }
  CHECK_THROWS_AS(fractional_onsager_exponent(R(0)), DomainError);
  CHECK_THROWS_AS(fractional_onsager_exponent(-0.1), DomainError);
}

TEST_CASE("mhd tradeoff rule") {
  CHECK(mhd_tradeoff_check(0.5, 0.3));
  CHECK_FALSE(mhd_tradeoff_check(0.2, 0.2));
  CHECK_FALSE(mhd_tradeoff_check(1.0, 0.0));
  CHECK_FALSE(mhd_tradeoff_check(0.0, 2.0));
  CHECK(mhd_tradeoff_check(0.01, 0.5));
}

TEST_CASE("threshold descriptions") {
  CHECK(describe_thresholds(ModelKind::leray_alpha) == "besov: s > 0; sobolev: u H^{5/2}, v H^{1/2}");
  CHECK(describe_thresholds(ModelKind::euler) == "besov: s > 1/3; sobolev: v H^{5/6}");
  const std::string csv = threshold_csv();
  CHECK(csv.rfind("model,conserved,besov_s,besov_r,besov_s_plus_2r,sobolev_u,sobolev_v", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}
