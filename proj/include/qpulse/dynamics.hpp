#pragma once

#include <cstdint>
#include <functional>

#include "qpulse/density.hpp"
#include "qpulse/lindblad.hpp"
#include "qpulse/pulse.hpp"

namespace qpulse {

struct IntegrationConfig {
  double dt = 0.02;  // requested step, 1/w0
  double t_start = 0.0;
  double t_end = 0.0;
  std::int64_t record_every = 10;

  /// Must resolve the carrier.
  static constexpr double kMaxStep = 0.05;

  /// Throws ConfigError on violated preconditions.
  void validate() const;
  /// Number of steps: the smallest multiple of record_every with
  /// steps * dt >= span.
  [[nodiscard]] std::int64_t steps() const;
  /// span / steps (<= dt); records land on a uniform grid ending at t_end.
  [[nodiscard]] double effective_dt() const;
};

struct Snapshot {
  double t;
  const ComplexMatrix& rho;
  Complex g;
  Complex dg;
};

using Observer = std::function<void(const Snapshot&)>;

/// Per-run numerical health, measured before the Hermitize/renormalize
/// safeguards are applied.
struct IntegrationStats {
  std::int64_t steps = 0;
  double max_trace_drift = 0.0;
  double max_hermiticity_error = 0.0;
  double min_record_eigenvalue = 1.0;
};

struct EvolveResult {
  DensityOperator final_state;
  IntegrationStats stats;
};

/// One classic RK4 step of d(rho)/dt = L_{g(t)}[rho]; no post-processing.
ComplexMatrix step_rk4(const Liouvillian& generator, const Drive& drive, const ComplexMatrix& rho,
                       double t, double dt);
ComplexMatrix step_rk4(const SystemModel& model, const Drive& drive, const ComplexMatrix& rho,
                       double t, double dt);

/// Fixed-step RK4 from t_start to t_end. After every step the state is
/// Hermitized and (if |tr - 1| > 1e-12) renormalized. The observer is called
/// at t_start and every record_every steps thereafter, the last call at t_end.
/// Throws IntegrationError on NaN/Inf or on a record eigenvalue below -1e-6.
EvolveResult evolve(const SystemModel& model, const Drive& drive, const DensityOperator& rho0,
                    const IntegrationConfig& cfg, const Observer& observer = {});

}  // namespace qpulse
