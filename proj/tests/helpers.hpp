#pragma once

#include <random>

#include "qpulse/density.hpp"
#include "qpulse/matrix.hpp"

namespace qtest {

using qpulse::Complex;
using qpulse::ComplexMatrix;

inline ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {d(rng), d(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix a = random_matrix(n, rng);
  ComplexMatrix h = a + a.adjoint();
  h *= 0.5;
  return h;
}

// A A^dagger / tr: full rank with probability one.
inline qpulse::DensityOperator random_state(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, rng);
  ComplexMatrix rho = a * a.adjoint();
  rho *= 1.0 / rho.trace().real();
  for (std::size_t r = 0; r < n; ++r) rho(r, r) = rho(r, r).real();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) rho(c, r) = std::conj(rho(r, c));
  return qpulse::DensityOperator(rho);
}

inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  const auto eig = qpulse::hermitian_eigen(random_hermitian(n, rng));
  ComplexMatrix u(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, eig.values[k]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) u(r, c) += eig.vectors(r, k) * phase * std::conj(eig.vectors(c, k));
  }
  return u;
}

}  // namespace qtest
