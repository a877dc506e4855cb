#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <optional>

#include "qpulse/lindblad.hpp"

namespace qpulse {

/// Four-level donor (|0>,|1>) / acceptor (|2>,|3>) photocell. Gaps in eV,
/// rates in units of w0 where hbar*w0 = donor_gap.
struct PhotocellParams {
  double donor_gap_ev = 1.8;
  double acceptor_gap_ev = 1.6;
  double gamma01 = 1e-3;    // radiative, also the pulse coupling
  double gamma12 = 1e-2;    // phonon transfer donor -> acceptor
  double gamma30 = 1e-2;    // phonon return acceptor -> donor
  double load_rate = 0.1;   // Gamma, external load conductance
  double tc_kelvin = 300.0;
  std::optional<double> phonon_energy_ev;  // default (donor - acceptor) / 2

  void validate() const;
  [[nodiscard]] double phonon_energy() const;
  /// E0..E3 in eV: E0 = 0, E1 = donor gap, E3 = phonon energy, E2 = E3 + acceptor gap.
  [[nodiscard]] std::array<double, 4> level_energies_ev() const;
  [[nodiscard]] double cold_occupation() const;
  [[nodiscard]] double phonon_occupation() const;
  /// k_B Tc in eV.
  [[nodiscard]] double thermal_energy_ev() const;
};

SystemModel build_photocell(const PhotocellParams& params);

/// Donor/acceptor decomposition of the photocell observables. Blocks of rho
/// are kept unnormalized so that S = S_D + S_A for a direct sum.
struct DonorAcceptorSplit {
  double donor_energy = 0.0;
  double acceptor_energy = 0.0;
  double donor_heat = 0.0;
  double acceptor_heat = 0.0;
  double donor_power = 0.0;
  double donor_entropy = 0.0;
  double acceptor_entropy = 0.0;
};

/// Coherence between the donor and acceptor blocks above which the split is
/// rejected.
inline constexpr double kMaxBlockCoherence = 1e-10;

/// Throws ModelViolation if rho has inter-block coherence above 1e-10 or if
/// the parts fail to add up to the totals within 1e-9.
DonorAcceptorSplit donor_acceptor_split(const ComplexMatrix& rho, const SystemModel& model, Complex g,
                                        Complex dg, const ComplexMatrix& rho_dot);

double max_block_coherence(const ComplexMatrix& rho);

/// Electrical observables at the load. NaN marks an undefined field.
struct ElectricalRecord {
  double current = 0.0;       // I = Gamma rho22, units e*w0
  double voltage = 0.0;       // volts; NaN while min(rho22, rho33) <= 1e-9
  double output_power = 0.0;  // I V in hbar*w0*w0
  double donor_power = 0.0;   // P_D in hbar*w0*w0
  double efficiency = 0.0;    // instantaneous P_out / P_D; NaN when P_D <= 1e-9
};

inline constexpr double kVoltagePopulationFloor = 1e-9;
inline constexpr double kDonorPowerFloor = 1e-9;

ElectricalRecord electrical(const ComplexMatrix& rho, const PhotocellParams& params, double kt_ev,
                            double donor_power);

/// Trailing moving average of P_out and P_D over a fixed number of records;
/// the efficiency is the ratio of the averages.
class EfficiencySmoother {
 public:
  explicit EfficiencySmoother(std::size_t window);

  /// Adds one record and returns the smoothed efficiency (NaN if undefined).
  double push(double output_power, double donor_power);

  [[nodiscard]] std::size_t window() const noexcept { return window_; }

 private:
  std::size_t window_;
  std::deque<std::pair<double, double>> samples_;
  double sum_out_ = 0.0;
  double sum_in_ = 0.0;
  std::size_t undefined_ = 0;
};

}  // namespace qpulse
