#include "qpulse/thermo.hpp"

#include <algorithm>
#include <cmath>

#include "qpulse/density.hpp"
#include "qpulse/errors.hpp"

namespace qpulse {

namespace {
constexpr double kLogFloor = 1e-12;
}

double energy(const ComplexMatrix& rho, const SystemModel& model, Complex g) {
  return real_trace_product(rho, system_hamiltonian(model, g));
}

double power(const ComplexMatrix& rho, const SystemModel& model, Complex dg) {
  return real_trace_product(rho, drive_hamiltonian_rate(model, dg));
}

double heat_current(const ComplexMatrix& rho_dot, const SystemModel& model, Complex g) {
  return real_trace_product(rho_dot, system_hamiltonian(model, g));
}

double energy_rate(const ComplexMatrix& rho, const SystemModel& model, Complex g, Complex dg) {
  return real_trace_product(dissipator_total(model, rho), system_hamiltonian(model, g)) +
         power(rho, model, dg);
}

double entropy_rate(const ComplexMatrix& rho_dot, const ComplexMatrix& rho, double fd_step) {
  if (rho_dot.dim() != rho.dim()) throw DimensionError("entropy_rate: dimension mismatch");

  if (real_trace_product(rho, rho) > kNearPurePurity) {
    ComplexMatrix ahead = rho;
    ahead.add_scaled(rho_dot, fd_step);
    const double s_ahead = spectral_entropy(ahead);
    ComplexMatrix behind = rho;
    behind.add_scaled(rho_dot, -fd_step);
    try {
      return (s_ahead - spectral_entropy(behind)) / (2.0 * fd_step);
    } catch (const PositivityError&) {
      return (s_ahead - spectral_entropy(rho)) / fd_step;
    }
  }

  const auto eig = hermitian_eigen(rho);
  if (eig.values.front() < -kClampWindow) {
    throw PositivityError("entropy_rate: state has a negative eigenvalue");
  }
  const std::size_t n = rho.dim();
  double rate = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    Complex weight = 0.0;  // <v_k| rho_dot |v_k>
    for (std::size_t r = 0; r < n; ++r) {
      Complex row = 0.0;
      for (std::size_t c = 0; c < n; ++c) row += rho_dot(r, c) * eig.vectors(c, k);
      weight += std::conj(eig.vectors(r, k)) * row;
    }
    rate -= weight.real() * std::log(std::max(eig.values[k], kLogFloor));
  }
  return rate;
}

double entropy_production(const ComplexMatrix& rho_dot, const ComplexMatrix& rho, const SystemModel& model,
                          Complex g, double beta) {
  if (model.channels.size() != 1) {
    throw UnsupportedConfiguration("entropy production is only defined for a single reservoir");
  }
  return entropy_rate(rho_dot, rho) - beta * heat_current(rho_dot, model, g);
}

ThermoRecord thermo_snapshot(const Snapshot& snap, const SystemModel& model, std::optional<double> beta) {
  const ComplexMatrix rho_dot = liouvillian_apply(model, snap.g, snap.rho);

  ThermoRecord rec;
  rec.t = snap.t;
  rec.energy = energy(snap.rho, model, snap.g);
  rec.power = power(snap.rho, model, snap.dg);
  rec.heat_current = heat_current(rho_dot, model, snap.g);
  rec.entropy = std::clamp(spectral_entropy(snap.rho), 0.0, std::log(static_cast<double>(model.dim())));
  rec.entropy_rate = entropy_rate(rho_dot, snap.rho);
  if (beta && model.channels.size() == 1) {
    rec.entropy_production = rec.entropy_rate - *beta * rec.heat_current;
  }
  rec.first_law_residual =
      std::abs(energy_rate(snap.rho, model, snap.g, snap.dg) - rec.heat_current - rec.power);
  return rec;
}

void accumulate(std::span<ThermoRecord> records) {
  if (records.empty()) return;
  records[0].work = 0.0;
  records[0].heat = 0.0;
  if (records.size() < 2) return;
  const double h = records[1].t - records[0].t;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double step = records[i].t - records[i - 1].t;
    if (!(step > 0.0) || std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(records[i].t))) {
      throw DomainError("accumulate: record grid is not uniform");
    }
    records[i].work = records[i - 1].work + 0.5 * step * (records[i].power + records[i - 1].power);
    records[i].heat = records[i - 1].heat + 0.5 * step * (records[i].heat_current + records[i - 1].heat_current);
  }
}

}  // namespace qpulse
