#include "qpulse/two_level.hpp"

#include <array>
#include <cmath>

#include "qpulse/errors.hpp"
#include "qpulse/units.hpp"

namespace qpulse {

double bose_occupation(double energy_ev, double temperature_k) {
  if (!(energy_ev > 0.0) || !(temperature_k > 0.0)) {
    throw DomainError("bose_occupation: energy and temperature must be positive");
  }
  const double x = energy_ev / (units::kBoltzmannEv * temperature_k);
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

double ww_rate(double dipole_cm, double omega0_rad_s) {
  if (dipole_cm < 0.0 || !(omega0_rad_s > 0.0)) throw DomainError("ww_rate: invalid input");
  const double c3 = units::kSpeedOfLight * units::kSpeedOfLight * units::kSpeedOfLight;
  const double coulomb = 1.0 / (4.0 * units::kPi * units::kVacuumPermittivity);
  return coulomb * 4.0 * omega0_rad_s * omega0_rad_s * omega0_rad_s * dipole_cm * dipole_cm /
         (3.0 * units::kHbarSi * c3);
}

double inverse_temperature(double energy_ev, double temperature_k) {
  return energy_ev / (units::kBoltzmannEv * temperature_k);
}

void TwoLevelParams::validate() const {
  if (!(gap_ev > 0.0)) throw ConfigError("two-level.gap must be positive");
  if (!(gamma >= 0.0)) throw ConfigError("two-level.gamma must be >= 0");
  if (!(tc_kelvin > 0.0)) throw ConfigError("two-level.tc must be positive");
  if (nbar_override && !(*nbar_override >= 0.0)) throw ConfigError("two-level.nbar-override must be >= 0");
}

double TwoLevelParams::nbar() const {
  return nbar_override ? *nbar_override : bose_occupation(gap_ev, tc_kelvin);
}

ComplexMatrix sigma_z() {
  const std::array<double, 2> d{1.0, -1.0};
  return ComplexMatrix::diagonal(d);
}
ComplexMatrix sigma_minus() { return ComplexMatrix::outer(2, 0, 1); }
ComplexMatrix sigma_plus() { return ComplexMatrix::outer(2, 1, 0); }

SystemModel build_two_level(const TwoLevelParams& params) {
  params.validate();
  ComplexMatrix h0 = sigma_z();
  h0 *= -0.5;
  std::vector<DissipationChannel> channels;
  channels.emplace_back(sigma_minus(), params.gamma, params.nbar());
  return SystemModel(std::move(h0), sigma_minus(), params.gamma, std::move(channels));
}

DensityOperator analytic_decay(const DensityOperator& rho0, double gamma, double t) {
  if (rho0.dim() != 2) throw DimensionError("analytic_decay: two-level state required");
  const ComplexMatrix& m = rho0.matrix();
  const double excited = m(1, 1).real() * std::exp(-gamma * t);
  // rho01 rotates as e^{+i t} under h0 = diag(-1/2, 1/2).
  const Complex coherence = m(0, 1) * std::exp(-0.5 * gamma * t) * Complex(std::cos(t), std::sin(t));
  ComplexMatrix out(2);
  out(0, 0) = 1.0 - excited;
  out(1, 1) = excited;
  out(0, 1) = coherence;
  out(1, 0) = std::conj(coherence);
  return DensityOperator(std::move(out));
}

}  // namespace qpulse
