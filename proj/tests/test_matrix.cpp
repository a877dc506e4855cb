#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "qpulse/errors.hpp"
#include "qpulse/matrix.hpp"

using namespace qpulse;

namespace {

// Characteristic polynomial by Faddeev-LeVerrier, coefficients c[0..n] of
// det(lambda I - A).
std::vector<Complex> char_poly(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

double poly_real(const std::vector<Complex>& c, double x) {
  Complex acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc.real();
}

// Real roots by scanning for sign changes and bisecting.
std::vector<double> brute_roots(const std::vector<Complex>& c, double radius) {
  std::vector<double> roots;
  const int n = 200000;
  double prev_x = -radius, prev = poly_real(c, prev_x);
  for (int i = 1; i <= n; ++i) {
    const double x = -radius + 2.0 * radius * i / n;
    const double v = poly_real(c, x);
    if ((prev < 0) != (v < 0)) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((poly_real(c, mid) < 0) == (prev < 0)) lo = mid; else hi = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = v;
    prev_x = x;
  }
  return roots;
}

double frobenius(const ComplexMatrix& m) {
  double s = 0;
  for (const auto& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("jacobi eigenvalues match characteristic polynomial roots") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix h = qtest::random_hermitian(4, rng);
    const auto eig = hermitian_eigen(h);
    const auto roots = brute_roots(char_poly(h), frobenius(h) + 1.0);
    REQUIRE(roots.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(eig.values[k] == doctest::Approx(roots[k]).epsilon(1e-9));
    CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
  }
}

TEST_CASE("eigenvectors are orthonormal and reconstruct the matrix") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
    const ComplexMatrix h = qtest::random_hermitian(n, rng);
    const auto eig = hermitian_eigen(h);
    CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::identity(n)) < 1e-12);
    CHECK(max_abs_diff(spectral_apply(eig, [](double x) { return x; }), h) < 1e-12);
  }
}

TEST_CASE("degenerate and diagonal spectra") {
  const std::vector<double> d{2.0, -1.0, 2.0, 0.5};
  const auto eig = hermitian_eigen(ComplexMatrix::diagonal(d));
  CHECK(eig.values == std::vector<double>{-1.0, 0.5, 2.0, 2.0});
  const auto id = hermitian_eigen(ComplexMatrix::identity(3));
  for (double v : id.values) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigen(m), DimensionError);
}

TEST_CASE("trace products and commutators") {
  std::mt19937_64 rng(3);
  const auto a = qtest::random_matrix(3, rng);
  const auto b = qtest::random_matrix(3, rng);
  CHECK(real_trace_product(a, b) == doctest::Approx((a * b).trace().real()).epsilon(1e-12));
  CHECK(max_abs_diff(commutator(a, b), a * b - b * a) == 0.0);
  CHECK(std::abs(commutator(a, b).trace()) < 1e-12);
}

TEST_CASE("outer products and blocks") {
  const auto m = ComplexMatrix::outer(4, 2, 3);
  CHECK(m(2, 3) == Complex(1.0));
  CHECK(m.max_abs() == 1.0);
  const auto blk = m.block(2, 2);
  CHECK(blk.dim() == 2);
  CHECK(blk(0, 1) == Complex(1.0));
  CHECK(m.adjoint()(3, 2) == Complex(1.0));
}
