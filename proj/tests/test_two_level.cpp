#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpulse/errors.hpp"
#include "qpulse/two_level.hpp"

using namespace qpulse;

namespace {
constexpr double kB = 8.617333262e-5;  // eV/K
}

TEST_CASE("bose occupation against the closed form") {
  CHECK(bose_occupation(1.0, 300.0) == doctest::Approx(1.0 / std::expm1(1.0 / (kB * 300.0))).epsilon(1e-12));
  CHECK(bose_occupation(1.0, 300.0) == doctest::Approx(1.588e-17).epsilon(1e-3));
  CHECK(bose_occupation(1.8, 5800.0) == doctest::Approx(1.0 / std::expm1(1.8 / (kB * 5800.0))).epsilon(1e-12));
  CHECK(bose_occupation(0.01, 300.0) == doctest::Approx(1.0 / std::expm1(0.01 / (kB * 300.0))).epsilon(1e-12));
  CHECK(bose_occupation(5.0, 1.0) == 0.0);
  CHECK_THROWS_AS(bose_occupation(0.0, 300.0), DomainError);
  CHECK_THROWS_AS(bose_occupation(1.0, -1.0), DomainError);
}

TEST_CASE("inverse temperature for 1 eV at room temperature") {
  CHECK(inverse_temperature(1.0, 300.0) == doctest::Approx(38.68).epsilon(1e-3));
  CHECK(TwoLevelParams{}.beta() == doctest::Approx(38.68).epsilon(1e-3));
}

TEST_CASE("default cold-bath occupation") {
  TwoLevelParams p;
  CHECK(p.nbar() == doctest::Approx(1.588e-17).epsilon(1e-3));
  p.nbar_override = 0.25;
  CHECK(p.nbar() == 0.25);
}

TEST_CASE("spontaneous emission rate in SI") {
  const double hbar = 1.054571817e-34, eps0 = 8.8541878128e-12, c = 299792458.0;
  const double d = 3.33564e-30;
  const double w = 1.602176634e-19 / hbar;
  const double expected = w * w * w * d * d / (3.0 * std::numbers::pi * eps0 * hbar * c * c * c);
  const double rate = ww_rate(d, w);
  CHECK(rate == doctest::Approx(expected).epsilon(1e-12));
  CHECK(1.0 / rate > 1e-9);
  CHECK(1.0 / rate < 1e-5);
  CHECK(ww_rate(2.0 * d, w) == doctest::Approx(4.0 * rate));
  CHECK(ww_rate(d, 2.0 * w) == doctest::Approx(8.0 * rate));
}

TEST_CASE("two-level model layout") {
  const auto m = build_two_level(TwoLevelParams{});
  CHECK(m.h0(1, 1).real() == doctest::Approx(0.5));
  CHECK(m.h0(0, 0).real() == doctest::Approx(-0.5));
  REQUIRE(m.channels.size() == 1);
  CHECK(m.channels[0].rate == doctest::Approx(1e-2));
  CHECK(max_abs_diff(m.drive_lower, sigma_minus()) == 0.0);
  CHECK(max_abs_diff(sigma_minus().adjoint(), sigma_plus()) == 0.0);
}

TEST_CASE("analytic decay") {
  const std::vector<Complex> psi{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  const auto rho0 = DensityOperator::pure(psi);
  CHECK(max_abs_diff(analytic_decay(rho0, 0.01, 0.0).matrix(), rho0.matrix()) < 1e-15);
  const auto later = analytic_decay(rho0, 0.01, 100.0);
  CHECK(later.population(1) == doctest::Approx(0.5 * std::exp(-1.0)));
  CHECK(std::abs(later.matrix()(0, 1)) == doctest::Approx(0.5 * std::exp(-0.5)));
  CHECK_THROWS_AS(analytic_decay(DensityOperator::basis(3, 0), 0.01, 1.0), DimensionError);
}

TEST_CASE("parameter validation") {
  TwoLevelParams p;
  p.gamma = -1.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}
