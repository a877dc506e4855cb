#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "qpulse/density.hpp"
#include "qpulse/errors.hpp"

using namespace qpulse;

TEST_CASE("construction validates trace, hermiticity and positivity") {
  ComplexMatrix m = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(DensityOperator{m}, DomainError);  // trace 2

  ComplexMatrix skew(2);
  skew(0, 0) = skew(1, 1) = 0.5;
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityOperator{skew}, DomainError);

  ComplexMatrix neg(2);
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityOperator{neg}, PositivityError);
}

TEST_CASE("entropy of pure and maximally mixed states") {
  const std::vector<Complex> psi{0.6, Complex(0.0, 0.8)};
  CHECK(von_neumann_entropy(DensityOperator::pure(psi)) == doctest::Approx(0.0));
  CHECK(DensityOperator::pure(psi).purity() == doctest::Approx(1.0));
  for (std::size_t n : {2u, 3u, 4u})
    CHECK(von_neumann_entropy(DensityOperator::maximally_mixed(n)) == doctest::Approx(std::log(double(n))));
}

TEST_CASE("entropy of a diagonal state") {
  ComplexMatrix m(3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.3;
  m(2, 2) = 0.2;
  const double expected = -(0.5 * std::log(0.5) + 0.3 * std::log(0.3) + 0.2 * std::log(0.2));
  CHECK(von_neumann_entropy(DensityOperator(m)) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("entropy is unitarily invariant") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const auto rho = qtest::random_state(n, rng);
    const auto u = qtest::random_unitary(n, rng);
    const DensityOperator rotated(u * rho.matrix() * u.adjoint());
    CHECK(von_neumann_entropy(rotated) == doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-10));
  }
}

TEST_CASE("spectral entropy is additive over direct sums") {
  ComplexMatrix a(2), b(2);
  a(0, 0) = 0.3;
  a(1, 1) = 0.1;
  a(0, 1) = 0.05;
  a(1, 0) = 0.05;
  b(0, 0) = 0.4;
  b(1, 1) = 0.2;
  ComplexMatrix full(4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      full(r, c) = a(r, c);
      full(r + 2, c + 2) = b(r, c);
    }
  CHECK(spectral_entropy(full) == doctest::Approx(spectral_entropy(a) + spectral_entropy(b)).epsilon(1e-13));
}

TEST_CASE("relative entropy") {
  std::mt19937_64 rng(5);
  const auto rho = qtest::random_state(3, rng);
  const auto sigma = qtest::random_state(3, rng);
  CHECK(std::abs(relative_entropy(rho, rho)) < 1e-12);
  CHECK(relative_entropy(rho, sigma) > 0.0);
  // Diagonal commuting case against the classical formula.
  ComplexMatrix p(2), q(2);
  p(0, 0) = 0.7;
  p(1, 1) = 0.3;
  q(0, 0) = 0.4;
  q(1, 1) = 0.6;
  const double kl = 0.7 * std::log(0.7 / 0.4) + 0.3 * std::log(0.3 / 0.6);
  CHECK(relative_entropy(DensityOperator(p), DensityOperator(q)) == doctest::Approx(kl).epsilon(1e-12));
  CHECK_THROWS_AS(relative_entropy(rho, DensityOperator::basis(3, 0)), DomainError);
}

TEST_CASE("gibbs state populations") {
  const std::vector<double> e{0.0, 1.0};
  const auto g = gibbs_state(ComplexMatrix::diagonal(e), 2.0);
  CHECK(g.population(1) == doctest::Approx(std::exp(-2.0) / (1.0 + std::exp(-2.0))).epsilon(1e-14));
  CHECK_THROWS_AS(gibbs_state(ComplexMatrix::diagonal(e), 0.0), DomainError);
}
