#include "qpulse/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qpulse/errors.hpp"
#include "qpulse/units.hpp"

namespace qpulse {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex carrier(double t) { return {std::cos(t), -std::sin(t)}; }

double envelope(const GaussianPulse& p, double t) {
  const double x = t - p.peak_time;
  const double w2 = p.bandwidth * p.bandwidth;
  return std::pow(w2 / units::kTwoPi, 0.25) * std::exp(-w2 * x * x / 4.0);
}

void require_bandwidth(double bandwidth) {
  if (!(bandwidth > 0.0)) throw ConfigError("pulse bandwidth must be positive");
}

}  // namespace

Complex GaussianPulse::value(double t) const { return envelope(*this, t) * carrier(t); }

Complex GaussianPulse::derivative(double t) const {
  const double x = t - peak_time;
  return Complex(-bandwidth * bandwidth * x / 2.0, -1.0) * value(t);
}

Complex pulse_value(const GaussianPulse& p, double t) { return p.value(t); }

std::string_view to_string(PulseMode mode) {
  switch (mode) {
    case PulseMode::Regular: return "regular";
    case PulseMode::Irregular: return "irregular";
    case PulseMode::Continuum: return "continuum";
  }
  return "regular";
}

PulseMode parse_pulse_mode(std::string_view name) {
  if (name == "regular") return PulseMode::Regular;
  if (name == "irregular") return PulseMode::Irregular;
  if (name == "continuum") return PulseMode::Continuum;
  throw ConfigError("unknown pulse mode '" + std::string(name) + "'");
}

PulseSequence::PulseSequence(Complex amplitude, std::vector<GaussianPulse> pulses, PulseMode mode)
    : amplitude_(amplitude), pulses_(std::move(pulses)), mode_(mode) {
  for (std::size_t i = 0; i < pulses_.size(); ++i) {
    require_bandwidth(pulses_[i].bandwidth);
    if (i > 0 && !(pulses_[i].peak_time > pulses_[i - 1].peak_time)) {
      throw ConfigError("pulse peak times must be strictly increasing");
    }
    max_radius_ = std::max(max_radius_, pulses_[i].support_radius());
  }
}

std::pair<std::size_t, std::size_t> PulseSequence::active_range(double t) const {
  const auto lo = std::lower_bound(pulses_.begin(), pulses_.end(), t - max_radius_,
                                   [](const GaussianPulse& p, double v) { return p.peak_time < v; });
  const auto hi = std::upper_bound(lo, pulses_.end(), t + max_radius_,
                                   [](double v, const GaussianPulse& p) { return v < p.peak_time; });
  return {static_cast<std::size_t>(lo - pulses_.begin()), static_cast<std::size_t>(hi - pulses_.begin())};
}

Complex PulseSequence::value(double t) const {
  const auto [lo, hi] = active_range(t);
  double env = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    if (std::abs(t - pulses_[i].peak_time) <= pulses_[i].support_radius()) env += envelope(pulses_[i], t);
  }
  return amplitude_ * env * carrier(t);
}

Complex PulseSequence::derivative(double t) const {
  const auto [lo, hi] = active_range(t);
  double env = 0.0;
  double env_rate = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    const auto& p = pulses_[i];
    if (std::abs(t - p.peak_time) > p.support_radius()) continue;
    const double e = envelope(p, t);
    env += e;
    env_rate += -p.bandwidth * p.bandwidth * (t - p.peak_time) / 2.0 * e;
  }
  // d/dt [A(t) e^{-it}] = (A' - i A) e^{-it}
  return amplitude_ * (env_rate - kI * env) * carrier(t);
}

std::vector<double> PulseSequence::peak_times() const {
  std::vector<double> out;
  out.reserve(pulses_.size());
  for (const auto& p : pulses_) out.push_back(p.peak_time);
  return out;
}

Complex sequence_value(const PulseSequence& s, double t) { return s.value(t); }
Complex sequence_derivative(const PulseSequence& s, double t) { return s.derivative(t); }

PulseSequence build_regular(int n_pulses, double first_peak, double spacing, double bandwidth,
                            Complex amplitude) {
  if (n_pulses < 1) throw ConfigError("pulse count must be >= 1");
  if (!(spacing > 0.0)) throw ConfigError("pulse spacing must be positive");
  require_bandwidth(bandwidth);
  std::vector<GaussianPulse> pulses;
  pulses.reserve(static_cast<std::size_t>(n_pulses));
  for (int k = 0; k < n_pulses; ++k) pulses.push_back({first_peak + k * spacing, bandwidth});
  return {amplitude, std::move(pulses), PulseMode::Regular};
}

PulseSequence build_irregular(int n_pulses, double first_peak, double nominal_spacing,
                              double jitter_fraction, std::uint64_t seed, double bandwidth,
                              Complex amplitude) {
  if (n_pulses < 1) throw ConfigError("pulse count must be >= 1");
  if (!(nominal_spacing > 0.0)) throw ConfigError("pulse spacing must be positive");
  if (!(jitter_fraction >= 0.0 && jitter_fraction < 0.5)) {
    throw ConfigError("jitter fraction must lie in [0, 0.5)");
  }
  require_bandwidth(bandwidth);

  // Raw 53-bit draws rather than std::uniform_real_distribution, whose output
  // is not specified identically across standard libraries.
  std::mt19937_64 rng(seed);
  const double half_width = jitter_fraction * nominal_spacing;
  std::vector<GaussianPulse> pulses;
  pulses.reserve(static_cast<std::size_t>(n_pulses));
  for (int k = 0; k < n_pulses; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    double peak = first_peak + k * nominal_spacing + (2.0 * u - 1.0) * half_width;
    if (!pulses.empty() && peak <= pulses.back().peak_time) {
      peak = pulses.back().peak_time + 1e-9 * nominal_spacing;
    }
    pulses.push_back({peak, bandwidth});
  }
  return {amplitude, std::move(pulses), PulseMode::Irregular};
}

PulseSequence build_continuum(double first_peak, double duration, double spacing, double bandwidth,
                              Complex amplitude) {
  require_bandwidth(bandwidth);
  if (!(spacing > 0.0)) throw ConfigError("pulse spacing must be positive");
  if (spacing > 2.0 / bandwidth) throw ConfigError("continuum spacing must be <= 2/bandwidth");
  if (!(duration >= 0.0)) throw ConfigError("continuum duration must be >= 0");
  const auto count = static_cast<std::size_t>(std::floor(duration / spacing + 1e-9)) + 1;
  std::vector<GaussianPulse> pulses;
  pulses.reserve(count);
  for (std::size_t k = 0; k < count; ++k) pulses.push_back({first_peak + static_cast<double>(k) * spacing, bandwidth});
  return {amplitude, std::move(pulses), PulseMode::Continuum};
}

}  // namespace qpulse
