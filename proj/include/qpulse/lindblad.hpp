#pragma once

#include <vector>

#include "qpulse/matrix.hpp"

namespace qpulse {

/// One reservoir coupling. Expands to the Lindblad pair
///   (rate/2)(n+1) (2 L rho L^+ - L^+L rho - rho L^+L)
/// + (rate/2) n    (2 L^+ rho L - L L^+ rho - rho L L^+)
/// where n is the thermal occupation (0 disables the absorption term).
struct DissipationChannel {
  ComplexMatrix jump;  // lowering operator L
  double rate = 0.0;
  double occupation = 0.0;

  DissipationChannel(ComplexMatrix jump_op, double rate_, double occupation_);
};

/// H_S(t) = h0 + i sqrt(drive_rate) (g* L - g L^+) with L = drive_lower, plus
/// dissipation channels. Energies in hbar*w0, rates in w0.
struct SystemModel {
  ComplexMatrix h0;
  ComplexMatrix drive_lower;
  double drive_rate = 0.0;
  std::vector<DissipationChannel> channels;

  SystemModel(ComplexMatrix h0_, ComplexMatrix drive_lower_, double drive_rate_,
              std::vector<DissipationChannel> channels_);

  [[nodiscard]] std::size_t dim() const noexcept { return h0.dim(); }
};

/// Channel contribution to d(rho)/dt.
ComplexMatrix dissipator_apply(const DissipationChannel& channel, const ComplexMatrix& rho);

/// Sum of all channel contributions.
ComplexMatrix dissipator_total(const SystemModel& model, const ComplexMatrix& rho);

/// h1(g) = i sqrt(rate) (g* L - g L^+)
ComplexMatrix drive_hamiltonian(const SystemModel& model, Complex g);

/// h0 + h1(g)
ComplexMatrix system_hamiltonian(const SystemModel& model, Complex g);

/// d h1 / dt for a drive with derivative dg.
ComplexMatrix drive_hamiltonian_rate(const SystemModel& model, Complex dg);

/// -i [h0 + h1(g), rho] + sum_k D_k[rho]
ComplexMatrix liouvillian_apply(const SystemModel& model, Complex drive_amp, const ComplexMatrix& rho);

/// The same generator with the channel products precomputed; used on the
/// integrator hot path. Results match liouvillian_apply to round-off.
class Liouvillian {
 public:
  explicit Liouvillian(const SystemModel& model);

  [[nodiscard]] ComplexMatrix apply(Complex drive_amp, const ComplexMatrix& rho) const;
  [[nodiscard]] const SystemModel& model() const noexcept { return model_; }

 private:
  struct Term {
    ComplexMatrix jump;
    ComplexMatrix jump_adj;
    ComplexMatrix anti;  // jump^+ jump
    double weight;       // prefactor multiplying 2 L rho L^+ - {L^+L, rho}
  };

  SystemModel model_;
  std::vector<Term> terms_;
};

}  // namespace qpulse
