#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qpulse/errors.hpp"
#include "qpulse/lindblad.hpp"
#include "qpulse/photocell.hpp"
#include "qpulse/two_level.hpp"

using namespace qpulse;

TEST_CASE("dissipator is traceless and preserves hermiticity") {
  std::mt19937_64 rng(1);
  const auto model = build_photocell(PhotocellParams{});
  for (int i = 0; i < 20; ++i) {
    const auto rho = qtest::random_state(4, rng);
    const auto d = dissipator_total(model, rho.matrix());
    CHECK(std::abs(d.trace()) < 1e-14);
    CHECK(d.hermiticity_error() < 1e-15);
  }
}

TEST_CASE("thermal state is stationary under its channel") {
  const double n = 0.3;
  DissipationChannel ch(ComplexMatrix::outer(2, 0, 1), 0.05, n);
  // Detailed balance: p1 / p0 = n / (n + 1).
  ComplexMatrix rho(2);
  rho(0, 0) = (n + 1.0) / (2.0 * n + 1.0);
  rho(1, 1) = n / (2.0 * n + 1.0);
  CHECK(dissipator_apply(ch, rho).max_abs() < 1e-16);
}

TEST_CASE("excited population decays at gamma") {
  DissipationChannel ch(ComplexMatrix::outer(2, 0, 1), 0.02, 0.0);
  const auto d = dissipator_apply(ch, ComplexMatrix::outer(2, 1, 1));
  CHECK(d(1, 1).real() == doctest::Approx(-0.02));
  CHECK(d(0, 0).real() == doctest::Approx(0.02));
}

TEST_CASE("drive hamiltonian is hermitian and linear in g") {
  const auto model = build_two_level(TwoLevelParams{});
  const Complex g(0.3, -0.7);
  const auto h = drive_hamiltonian(model, g);
  CHECK(h.hermiticity_error() < 1e-16);
  CHECK(max_abs_diff(drive_hamiltonian(model, 2.0 * g), 2.0 * h) < 1e-16);
  // i sqrt(gamma) (g* L - g L^dagger) with L = |0><1|.
  CHECK(h(0, 1) == Complex(0.0, 1.0) * std::sqrt(model.drive_rate) * std::conj(g));
}

TEST_CASE("precomputed liouvillian agrees with the direct form") {
  std::mt19937_64 rng(2);
  const auto model = build_photocell(PhotocellParams{});
  const Liouvillian l(model);
  for (int i = 0; i < 10; ++i) {
    const auto rho = qtest::random_state(4, rng);
    const Complex g(0.1 * i, -0.05 * i);
    CHECK(max_abs_diff(l.apply(g, rho.matrix()), liouvillian_apply(model, g, rho.matrix())) < 1e-15);
  }
}

TEST_CASE("model validation") {
  const auto h0 = sigma_z() * Complex(-0.5);
  CHECK_THROWS_AS(SystemModel(h0, sigma_plus(), 0.01, {}), DomainError);
  CHECK_THROWS_AS(SystemModel(h0, ComplexMatrix(3), 0.01, {}), DimensionError);
  CHECK_THROWS_AS(DissipationChannel(sigma_minus(), -1.0, 0.0), DomainError);
  CHECK_NOTHROW(SystemModel(h0, sigma_minus(), 0.01, {}));
}
