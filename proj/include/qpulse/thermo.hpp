#pragma once

#include <optional>
#include <span>

#include "qpulse/dynamics.hpp"
#include "qpulse/lindblad.hpp"

namespace qpulse {

/// One row of the thermodynamic time series. Energies in hbar*w0, rates per
/// 1/w0, entropies in nats. Cumulative W and Q are filled by accumulate().
struct ThermoRecord {
  double t = 0.0;
  double energy = 0.0;
  double power = 0.0;
  double heat_current = 0.0;
  double work = 0.0;
  double heat = 0.0;
  double entropy = 0.0;
  double entropy_rate = 0.0;
  std::optional<double> entropy_production;  // single-bath models only
  double first_law_residual = 0.0;
};

/// E = Re tr[rho (h0 + h1(g))]
double energy(const ComplexMatrix& rho, const SystemModel& model, Complex g);

/// P = Re tr[rho dh1/dt]
double power(const ComplexMatrix& rho, const SystemModel& model, Complex dg);

/// J = Re tr[rho_dot (h0 + h1(g))]
double heat_current(const ComplexMatrix& rho_dot, const SystemModel& model, Complex g);

/// dE/dt from the dissipative part and the explicit time dependence only,
/// Re tr[D[rho] H] + Re tr[rho dH/dt]; the commutator part is dropped because
/// it is traceless against H. Used as the independent side of the first-law
/// residual.
double energy_rate(const ComplexMatrix& rho, const SystemModel& model, Complex g, Complex dg);

/// Purity above which the entropy rate is taken by finite differences.
inline constexpr double kNearPurePurity = 1.0 - 1e-9;

/// dS/dt = -Re tr[rho_dot ln rho] in the eigenbasis of rho. Eigenvalues below
/// 1e-12 use ln(1e-12). Near-pure states fall back to a finite difference of
/// S along rho +- h rho_dot.
double entropy_rate(const ComplexMatrix& rho_dot, const ComplexMatrix& rho, double fd_step = 1e-6);

/// sigma = dS/dt - beta J. Only defined for a single reservoir; throws
/// UnsupportedConfiguration otherwise.
double entropy_production(const ComplexMatrix& rho_dot, const ComplexMatrix& rho, const SystemModel& model,
                          Complex g, double beta);

/// Instantaneous observables for one integrator snapshot. `beta` enables the
/// entropy-production column (single-bath models).
ThermoRecord thermo_snapshot(const Snapshot& snap, const SystemModel& model, std::optional<double> beta);

/// Trapezoidal cumulative W = int P and Q = int J on the record grid. Throws
/// DomainError if the grid is not uniform.
void accumulate(std::span<ThermoRecord> records);

}  // namespace qpulse
