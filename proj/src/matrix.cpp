#include "qpulse/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qpulse/errors.hpp"

namespace qpulse {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dim must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim) throw DimensionError("outer: index out of range");
  ComplexMatrix m(dim);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_error() const noexcept {
  double m = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t first, std::size_t size) const {
  if (first + size > dim_) throw DimensionError("block: range exceeds matrix");
  ComplexMatrix out(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = (*this)(first + r, first + c);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix& ComplexMatrix::add_scaled(const ComplexMatrix& other, Complex scale) {
  require_same_dim(*this, other, "add_scaled");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += scale * other.entries_[i];
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "real_trace_product");
  const std::size_t n = a.dim();
  double acc = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) acc += (a(r, k) * b(k, r)).real();
  return acc;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  constexpr double kHermitianTol = 1e-10;
  constexpr double kOffDiagonalTarget = 1e-12;
  constexpr int kMaxSweeps = 100;

  const std::size_t n = m.dim();
  if (m.hermiticity_error() > kHermitianTol) {
    throw DimensionError("hermitian_eigen: input is not Hermitian (error " +
                         std::to_string(m.hermiticity_error()) + ")");
  }

  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) s += std::norm(a(r, c));
    return std::sqrt(2.0 * s);
  };
  double scale = 0.0;
  for (const auto& z : a.data()) scale += std::norm(z);
  const double target = kOffDiagonalTarget * std::max(1.0, std::sqrt(scale));

  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        // Rotate the phase of q so that a(p,q) becomes real and positive.
        const Complex phase = apq / mag;  // e^{i phi}
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= std::conj(phase);
          a(q, k) *= phase;
          v(k, q) *= std::conj(phase);
        }
        a(q, q) = a(q, q).real();

        // Real symmetric 2x2 rotation on (p,q).
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_norm() > target) {
    throw std::runtime_error("hermitian_eigen: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace qpulse
