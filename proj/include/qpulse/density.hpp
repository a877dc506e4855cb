#pragma once

#include <span>

#include "qpulse/matrix.hpp"

namespace qpulse {

/// Unit-trace, Hermitian, positive semidefinite matrix. Construction validates
/// and exactly Hermitizes the input; afterwards the value is immutable.
class DensityOperator {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-9;
  static constexpr double kPositivityTol = 1e-9;

  explicit DensityOperator(ComplexMatrix m);

  /// |psi><psi| for a normalized state vector.
  static DensityOperator pure(std::span<const Complex> psi);
  /// |k><k|
  static DensityOperator basis(std::size_t dim, std::size_t k);
  static DensityOperator maximally_mixed(std::size_t dim);

  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }
  [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
  [[nodiscard]] double population(std::size_t k) const { return m_(k, k).real(); }
  [[nodiscard]] double purity() const;

 private:
  ComplexMatrix m_;
};

/// Entropy clamping window: eigenvalues in [-kClampWindow, 0) count as 0.
inline constexpr double kClampWindow = 1e-9;

/// -sum lambda ln lambda over the spectrum of any Hermitian PSD matrix. The
/// trace is not required to be 1, so blocks of a direct sum can be passed.
/// Throws PositivityError for eigenvalues below -1e-9.
double spectral_entropy(const ComplexMatrix& m);

/// Von Neumann entropy in nats, in [0, ln dim].
double von_neumann_entropy(const DensityOperator& rho);

/// S(rho || sigma) = tr rho (ln rho - ln sigma). Throws DomainError when the
/// support of rho is not contained in that of sigma.
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

/// e^{-beta h} / Z
DensityOperator gibbs_state(const ComplexMatrix& h, double beta);

}  // namespace qpulse
