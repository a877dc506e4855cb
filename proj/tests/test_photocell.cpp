#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "qpulse/dynamics.hpp"
#include "qpulse/errors.hpp"
#include "qpulse/photocell.hpp"
#include "qpulse/thermo.hpp"

using namespace qpulse;

namespace {

ComplexMatrix block_state(std::mt19937_64& rng) {
  const auto d = qtest::random_state(2, rng).matrix();
  const auto a = qtest::random_state(2, rng).matrix();
  ComplexMatrix rho(4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      rho(r, c) = 0.6 * d(r, c);
      rho(r + 2, c + 2) = 0.4 * a(r, c);
    }
  return rho;
}

ComplexMatrix populations(double p0, double p1, double p2, double p3) {
  const std::vector<double> d{p0, p1, p2, p3};
  return ComplexMatrix::diagonal(d);
}

}  // namespace

TEST_CASE("level placement and occupations") {
  const PhotocellParams p;
  const auto e = p.level_energies_ev();
  CHECK(e[0] == 0.0);
  CHECK(e[1] == doctest::Approx(1.8));
  CHECK(e[2] == doctest::Approx(1.7));
  CHECK(e[3] == doctest::Approx(0.1));
  CHECK(p.phonon_occupation() == doctest::Approx(1.0 / std::expm1(0.1 / (8.617333262e-5 * 300.0))).epsilon(1e-12));
  CHECK(p.phonon_occupation() == doctest::Approx(0.02134).epsilon(1e-3));
}

TEST_CASE("photocell model") {
  const auto m = build_photocell(PhotocellParams{});
  CHECK(m.dim() == 4);
  CHECK(m.channels.size() == 4);
  CHECK(m.h0(1, 1).real() == doctest::Approx(1.0));
  CHECK(m.drive_lower(0, 1) == Complex(1.0));
}

TEST_CASE("donor and acceptor parts add up") {
  std::mt19937_64 rng(31);
  const auto model = build_photocell(PhotocellParams{});
  for (int i = 0; i < 20; ++i) {
    const auto rho = block_state(rng);
    const Complex g(0.3, 0.1), dg(0.1, -0.3);
    const auto rho_dot = liouvillian_apply(model, g, rho);
    const auto s = donor_acceptor_split(rho, model, g, dg, rho_dot);
    CHECK(s.donor_energy + s.acceptor_energy == doctest::Approx(energy(rho, model, g)).epsilon(1e-12));
    CHECK(s.donor_heat + s.acceptor_heat == doctest::Approx(heat_current(rho_dot, model, g)).epsilon(1e-10));
    CHECK(s.donor_entropy + s.acceptor_entropy == doctest::Approx(spectral_entropy(rho)).epsilon(1e-12));
    CHECK(s.donor_power == doctest::Approx(power(rho, model, dg)).epsilon(1e-12));
  }
}

TEST_CASE("inter-block coherence is rejected") {
  std::mt19937_64 rng(2);
  const auto rho = qtest::random_state(4, rng).matrix();
  const auto model = build_photocell(PhotocellParams{});
  CHECK(max_block_coherence(rho) > 1e-3);
  CHECK_THROWS_AS(donor_acceptor_split(rho, model, 0.0, 0.0, liouvillian_apply(model, 0.0, rho)), ModelViolation);
}

TEST_CASE("driven evolution from the ground state stays block diagonal") {
  const auto model = build_photocell(PhotocellParams{});
  const auto drive = build_regular(1, 60.0, 1.0, 1.0 / (4.0 * 3.14159265358979), 3.0);
  IntegrationConfig cfg;
  cfg.t_end = 200.0;
  double worst = 0.0;
  evolve(model, drive, DensityOperator::basis(4, 0), cfg,
         [&](const Snapshot& s) { worst = std::max(worst, max_block_coherence(s.rho)); });
  CHECK(worst < kMaxBlockCoherence);
}

TEST_CASE("electrical observables") {
  const PhotocellParams p;
  const double kt = p.thermal_energy_ev();
  auto e = electrical(populations(0.5, 0.2, 0.15, 0.15), p, kt, 0.01);
  CHECK(e.current == doctest::Approx(0.1 * 0.15));
  CHECK(e.voltage == doctest::Approx(1.6));
  CHECK(e.output_power == doctest::Approx(e.current * 1.6 / 1.8));
  CHECK(e.efficiency == doctest::Approx(e.output_power / 0.01));

  e = electrical(populations(0.5, 0.2, 0.2, 0.1), p, kt, 0.01);
  CHECK(e.voltage == doctest::Approx(1.6 + kt * std::log(2.0)));

  e = electrical(populations(1.0, 0.0, 0.0, 0.0), p, kt, 0.0);
  CHECK(std::isnan(e.voltage));
  CHECK(std::isnan(e.efficiency));
  CHECK(e.current == 0.0);
}

TEST_CASE("efficiency smoother averages powers, not ratios") {
  EfficiencySmoother s(2);
  CHECK(s.push(1.0, 2.0) == doctest::Approx(0.5));
  CHECK(s.push(3.0, 2.0) == doctest::Approx(1.0));  // (1 + 3) / (2 + 2)
  CHECK(s.push(1.0, 6.0) == doctest::Approx(0.5));  // (3 + 1) / (2 + 6)
  CHECK(std::isnan(s.push(std::nan(""), 1.0)));
  CHECK(std::isnan(s.push(1.0, 1.0)));              // NaN still in the window
  CHECK(s.push(1.0, 1.0) == doctest::Approx(1.0));
  CHECK(std::isnan(EfficiencySmoother(3).push(0.0, 0.0)));
  CHECK_THROWS_AS(EfficiencySmoother(0), DomainError);
}

TEST_CASE("parameter validation") {
  PhotocellParams p;
  p.acceptor_gap_ev = 2.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = PhotocellParams{};
  p.load_rate = -0.1;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}
