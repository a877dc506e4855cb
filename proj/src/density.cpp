#include "qpulse/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpulse/errors.hpp"

namespace qpulse {

DensityOperator::DensityOperator(ComplexMatrix m) : m_(std::move(m)) {
  // Round-off from arithmetic on the input is tolerated up to 1e-10; the
  // stored value is Hermitian to machine precision.
  const double herr = m_.hermiticity_error();
  if (herr > 1e-10) {
    throw DomainError("DensityOperator: not Hermitian (error " + std::to_string(herr) + ")");
  }
  ComplexMatrix h = m_.adjoint();
  h += m_;
  h *= 0.5;
  m_ = std::move(h);

  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw DomainError("DensityOperator: trace " + std::to_string(tr) + " != 1");
  }
  const auto eig = hermitian_eigen(m_);
  if (eig.values.front() < -kPositivityTol) {
    throw PositivityError("DensityOperator: negative eigenvalue " + std::to_string(eig.values.front()));
  }
}

DensityOperator DensityOperator::pure(std::span<const Complex> psi) {
  const std::size_t n = psi.size();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::basis(std::size_t dim, std::size_t k) {
  return DensityOperator(ComplexMatrix::outer(dim, k, k));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityOperator(std::move(m));
}

double DensityOperator::purity() const { return real_trace_product(m_, m_); }

double spectral_entropy(const ComplexMatrix& m) {
  const auto eig = hermitian_eigen(m);
  double s = 0.0;
  for (double lambda : eig.values) {
    if (lambda < -kClampWindow) {
      throw PositivityError("entropy: eigenvalue " + std::to_string(lambda) + " below clamping window");
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

double von_neumann_entropy(const DensityOperator& rho) {
  const double s = spectral_entropy(rho.matrix());
  return std::clamp(s, 0.0, std::log(static_cast<double>(rho.dim())));
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("relative_entropy: dimension mismatch");
  constexpr double kSupportTol = 1e-12;
  const std::size_t n = rho.dim();
  const auto er = hermitian_eigen(rho.matrix());
  const auto es = hermitian_eigen(sigma.matrix());

  double result = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = er.values[i];
    if (lambda <= kSupportTol) continue;
    double cross = 0.0;  // sum_j |<v_i|w_j>|^2 ln mu_j
    for (std::size_t j = 0; j < n; ++j) {
      Complex overlap = 0.0;
      for (std::size_t r = 0; r < n; ++r) overlap += std::conj(er.vectors(r, i)) * es.vectors(r, j);
      const double w = std::norm(overlap);
      const double mu = es.values[j];
      if (mu <= kSupportTol) {
        if (w > kSupportTol) throw DomainError("relative_entropy: support of rho not contained in support of sigma");
        continue;
      }
      cross += w * std::log(mu);
    }
    result += lambda * (std::log(lambda) - cross);
  }
  return result;
}

DensityOperator gibbs_state(const ComplexMatrix& h, double beta) {
  if (!(beta > 0.0)) throw DomainError("gibbs_state: beta must be positive");
  const auto eig = hermitian_eigen(h);
  const double e0 = eig.values.front();
  double z = 0.0;
  for (double e : eig.values) z += std::exp(-beta * (e - e0));
  return DensityOperator(spectral_apply(eig, [&](double e) { return std::exp(-beta * (e - e0)) / z; }));
}

}  // namespace qpulse
