#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qpulse/matrix.hpp"

namespace qpulse {

/// Time-dependent complex drive amplitude g(t) and its exact derivative.
/// The integrator and the power observable only see this interface, so other
/// pulse shapes can be added without touching them.
class Drive {
 public:
  virtual ~Drive() = default;
  [[nodiscard]] virtual Complex value(double t) const = 0;
  [[nodiscard]] virtual Complex derivative(double t) const = 0;
};

/// Normalized Gaussian wave packet on the w0 = 1 carrier:
///   xi(t) = (W^2 / 2pi)^{1/4} exp[-W^2 (t - t_i)^2 / 4 - i t]
struct GaussianPulse {
  double peak_time = 0.0;
  double bandwidth = 1.0;  // W, units of w0

  /// Evaluation cutoff in units of 1/W; the envelope is below 1e-10 there.
  static constexpr double kTruncation = 10.0;

  [[nodiscard]] Complex value(double t) const;
  [[nodiscard]] Complex derivative(double t) const;
  [[nodiscard]] double support_radius() const noexcept { return kTruncation / bandwidth; }
};

Complex pulse_value(const GaussianPulse& p, double t);

enum class PulseMode { Regular, Irregular, Continuum };

std::string_view to_string(PulseMode mode);
PulseMode parse_pulse_mode(std::string_view name);

/// g(t) = alpha * sum_i xi(t; t_i), with <n> = |alpha|^2 per pulse.
class PulseSequence final : public Drive {
 public:
  PulseSequence() = default;
  PulseSequence(Complex amplitude, std::vector<GaussianPulse> pulses, PulseMode mode);

  [[nodiscard]] Complex value(double t) const override;
  [[nodiscard]] Complex derivative(double t) const override;

  [[nodiscard]] Complex amplitude() const noexcept { return amplitude_; }
  [[nodiscard]] double mean_photons() const noexcept { return std::norm(amplitude_); }
  [[nodiscard]] const std::vector<GaussianPulse>& pulses() const noexcept { return pulses_; }
  [[nodiscard]] PulseMode mode() const noexcept { return mode_; }
  [[nodiscard]] std::vector<double> peak_times() const;

 private:
  // Indices of pulses whose truncated support may contain t.
  [[nodiscard]] std::pair<std::size_t, std::size_t> active_range(double t) const;

  Complex amplitude_{0.0, 0.0};
  std::vector<GaussianPulse> pulses_;
  PulseMode mode_ = PulseMode::Regular;
  double max_radius_ = 0.0;
};

Complex sequence_value(const PulseSequence& s, double t);
Complex sequence_derivative(const PulseSequence& s, double t);

/// Peaks at first_peak + k*spacing, k = 0..n-1.
PulseSequence build_regular(int n_pulses, double first_peak, double spacing, double bandwidth,
                            Complex amplitude);

/// Regular grid with each peak displaced by a uniform offset in
/// +-jitter_fraction*nominal_spacing, drawn from a seeded generator.
PulseSequence build_irregular(int n_pulses, double first_peak, double nominal_spacing,
                              double jitter_fraction, std::uint64_t seed, double bandwidth,
                              Complex amplitude);

/// Overlapping pulses tiling [first_peak, first_peak + duration].
PulseSequence build_continuum(double first_peak, double duration, double spacing, double bandwidth,
                              Complex amplitude);

}  // namespace qpulse
