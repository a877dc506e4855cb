#include "qpulse/dynamics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qpulse/errors.hpp"

namespace qpulse {

namespace {

constexpr double kRecordPositivityTol = 1e-6;
constexpr double kRenormalizeThreshold = 1e-12;

bool all_finite(const ComplexMatrix& m) {
  for (const auto& z : m.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

std::string at_time(const char* what, double t) {
  std::ostringstream os;
  os.precision(10);
  os << what << " at t = " << t;
  return os.str();
}

}  // namespace

void IntegrationConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("integration.dt must be positive");
  if (dt > kMaxStep) {
    std::ostringstream os;
    os << "integration.dt = " << dt << " does not resolve the carrier (must be <= " << kMaxStep << ")";
    throw ConfigError(os.str());
  }
  if (!(t_end >= t_start)) throw ConfigError("integration.t-end must be >= t-start");
  if (record_every < 1) throw ConfigError("integration.record-every must be >= 1");
  if ((t_end - t_start) / dt > 9.0e18) throw ConfigError("integration span does not fit a 64-bit step count");
}

std::int64_t IntegrationConfig::steps() const {
  const double raw = std::ceil((t_end - t_start) / dt - 1e-9);
  const auto blocks = static_cast<std::int64_t>(std::ceil(raw / static_cast<double>(record_every) - 1e-12));
  return blocks * record_every;
}

double IntegrationConfig::effective_dt() const {
  const auto n = steps();
  return n == 0 ? dt : (t_end - t_start) / static_cast<double>(n);
}

ComplexMatrix step_rk4(const Liouvillian& generator, const Drive& drive, const ComplexMatrix& rho,
                       double t, double dt) {
  const Complex g0 = drive.value(t);
  const Complex g_half = drive.value(t + 0.5 * dt);
  const Complex g1 = drive.value(t + dt);

  const ComplexMatrix k1 = generator.apply(g0, rho);
  ComplexMatrix probe = rho;
  probe.add_scaled(k1, 0.5 * dt);
  const ComplexMatrix k2 = generator.apply(g_half, probe);
  probe = rho;
  probe.add_scaled(k2, 0.5 * dt);
  const ComplexMatrix k3 = generator.apply(g_half, probe);
  probe = rho;
  probe.add_scaled(k3, dt);
  const ComplexMatrix k4 = generator.apply(g1, probe);

  ComplexMatrix next = rho;
  next.add_scaled(k1, dt / 6.0);
  next.add_scaled(k2, dt / 3.0);
  next.add_scaled(k3, dt / 3.0);
  next.add_scaled(k4, dt / 6.0);
  return next;
}

ComplexMatrix step_rk4(const SystemModel& model, const Drive& drive, const ComplexMatrix& rho,
                       double t, double dt) {
  return step_rk4(Liouvillian(model), drive, rho, t, dt);
}

EvolveResult evolve(const SystemModel& model, const Drive& drive, const DensityOperator& rho0,
                    const IntegrationConfig& cfg, const Observer& observer) {
  cfg.validate();
  if (rho0.dim() != model.dim()) throw DimensionError("evolve: initial state dimension mismatch");

  const Liouvillian generator(model);
  const std::int64_t steps = cfg.steps();
  const double h = cfg.effective_dt();

  IntegrationStats stats;
  stats.steps = steps;
  ComplexMatrix rho = rho0.matrix();

  auto record = [&](double t) {
    const auto eig = hermitian_eigen(rho);
    stats.min_record_eigenvalue = std::min(stats.min_record_eigenvalue, eig.values.front());
    if (eig.values.front() < -kRecordPositivityTol) {
      std::ostringstream os;
      os << "integration unstable: eigenvalue " << eig.values.front();
      throw IntegrationError(at_time(os.str().c_str(), t));
    }
    if (observer) observer(Snapshot{t, rho, drive.value(t), drive.derivative(t)});
  };

  record(cfg.t_start);
  for (std::int64_t k = 0; k < steps; ++k) {
    const double t = cfg.t_start + static_cast<double>(k) * h;
    rho = step_rk4(generator, drive, rho, t, h);
    if (!all_finite(rho)) throw IntegrationError(at_time("non-finite state", t + h));

    stats.max_hermiticity_error = std::max(stats.max_hermiticity_error, rho.hermiticity_error());
    ComplexMatrix herm = rho.adjoint();
    herm += rho;
    herm *= 0.5;
    rho = std::move(herm);

    const double tr = rho.trace().real();
    const double drift = std::abs(tr - 1.0);
    stats.max_trace_drift = std::max(stats.max_trace_drift, drift);
    if (drift > kRenormalizeThreshold) rho *= 1.0 / tr;

    if ((k + 1) % cfg.record_every == 0) {
      const double t_next = (k + 1 == steps) ? cfg.t_end : cfg.t_start + static_cast<double>(k + 1) * h;
      record(t_next);
    }
  }
  try {
    return {DensityOperator(rho), stats};
  } catch (const PositivityError& e) {
    throw IntegrationError(at_time(e.what(), cfg.t_end));
  }
}

}  // namespace qpulse
