#pragma once

#include <optional>

#include "qpulse/density.hpp"
#include "qpulse/lindblad.hpp"

namespace qpulse {

/// Mean thermal occupation 1/(e^{E/kT} - 1); returns 0 on underflow.
double bose_occupation(double energy_ev, double temperature_k);

/// Weisskopf-Wigner spontaneous emission rate in 1/s for a transition dipole
/// (C m) at angular frequency omega0 (rad/s).
double ww_rate(double dipole_cm, double omega0_rad_s);

/// hbar*w0 / (k_B T) for an energy in eV.
double inverse_temperature(double energy_ev, double temperature_k);

struct TwoLevelParams {
  double gap_ev = 1.0;
  double gamma = 1e-2;  // units of w0
  double tc_kelvin = 300.0;
  std::optional<double> nbar_override;

  void validate() const;
  [[nodiscard]] double nbar() const;
  /// Cold-bath beta in units of 1/(hbar w0).
  [[nodiscard]] double beta() const { return inverse_temperature(gap_ev, tc_kelvin); }
};

/// sigma_z = |0><0| - |1><1|, so h0 = -(1/2) sigma_z puts |1> on top.
ComplexMatrix sigma_z();
ComplexMatrix sigma_minus();  // |0><1|
ComplexMatrix sigma_plus();   // |1><0|

/// h0 = -(1/2) sigma_z, drive sigma_-, one cold-bath channel.
SystemModel build_two_level(const TwoLevelParams& params);

/// Closed-form amplitude damping (n = 0, no drive) of a two-level state under
/// h0 = -(1/2) sigma_z.
DensityOperator analytic_decay(const DensityOperator& rho0, double gamma, double t);

}  // namespace qpulse
