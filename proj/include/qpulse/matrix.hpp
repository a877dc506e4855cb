#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qpulse {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Intended for the small Hilbert
/// spaces used here (dim <= 8); no expression templates, no aliasing tricks.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> entries);
  /// |row><col| in a `dim`-level space.
  static ComplexMatrix outer(std::size_t dim, std::size_t row, std::size_t col);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::span<const Complex> data() const noexcept { return entries_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * dim_ + c];
  }

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] Complex trace() const noexcept;
  [[nodiscard]] double max_abs() const noexcept;
  /// max |m - m^dagger|
  [[nodiscard]] double hermiticity_error() const noexcept;
  /// Block [first, first+size) x [first, first+size).
  [[nodiscard]] ComplexMatrix block(std::size_t first, std::size_t size) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;
  /// this += scale * other
  ComplexMatrix& add_scaled(const ComplexMatrix& other, Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

/// ab - ba
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re tr(a b) without forming the product.
double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-norm distance.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws DimensionError for non-Hermitian input (tolerance 1e-10)
/// and std::runtime_error if 100 sweeps do not converge.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

/// V diag(f(lambda)) V^dagger for a decomposition.
template <class Fn>
ComplexMatrix spectral_apply(const EigenDecomposition& eig, Fn&& fn) {
  const std::size_t n = eig.values.size();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = fn(eig.values[k]);
    if (w == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = eig.vectors(r, k) * w;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return out;
}

}  // namespace qpulse
