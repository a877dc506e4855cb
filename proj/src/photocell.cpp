#include "qpulse/photocell.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qpulse/density.hpp"
#include "qpulse/errors.hpp"
#include "qpulse/thermo.hpp"
#include "qpulse/two_level.hpp"
#include "qpulse/units.hpp"

namespace qpulse {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSplitTol = 1e-9;

}  // namespace

void PhotocellParams::validate() const {
  if (!(acceptor_gap_ev > 0.0)) throw ConfigError("photocell.acceptor-gap must be positive");
  if (!(donor_gap_ev > acceptor_gap_ev)) throw ConfigError("photocell.donor-gap must exceed acceptor-gap");
  if (!(gamma01 >= 0.0)) throw ConfigError("photocell.gamma01 must be >= 0");
  if (!(gamma12 >= 0.0)) throw ConfigError("photocell.gamma12 must be >= 0");
  if (!(gamma30 >= 0.0)) throw ConfigError("photocell.gamma30 must be >= 0");
  if (!(load_rate >= 0.0)) throw ConfigError("photocell.big-gamma must be >= 0");
  if (!(tc_kelvin > 0.0)) throw ConfigError("photocell.tc must be positive");
  const double ph = phonon_energy();
  if (!(ph > 0.0)) throw ConfigError("photocell.phonon-energy must be positive");
  if (!(donor_gap_ev - acceptor_gap_ev - ph > 0.0)) {
    throw ConfigError("photocell.phonon-energy leaves the acceptor top above the donor excited level");
  }
}

double PhotocellParams::phonon_energy() const {
  return phonon_energy_ev ? *phonon_energy_ev : 0.5 * (donor_gap_ev - acceptor_gap_ev);
}

std::array<double, 4> PhotocellParams::level_energies_ev() const {
  const double e3 = phonon_energy();
  return {0.0, donor_gap_ev, e3 + acceptor_gap_ev, e3};
}

double PhotocellParams::cold_occupation() const { return bose_occupation(donor_gap_ev, tc_kelvin); }
double PhotocellParams::phonon_occupation() const { return bose_occupation(phonon_energy(), tc_kelvin); }
double PhotocellParams::thermal_energy_ev() const { return units::kBoltzmannEv * tc_kelvin; }

SystemModel build_photocell(const PhotocellParams& params) {
  params.validate();
  auto levels = params.level_energies_ev();
  for (auto& e : levels) e /= params.donor_gap_ev;
  const double n_ph = params.phonon_occupation();

  std::vector<DissipationChannel> channels;
  channels.emplace_back(ComplexMatrix::outer(4, 0, 1), params.gamma01, params.cold_occupation());
  channels.emplace_back(ComplexMatrix::outer(4, 2, 1), params.gamma12, n_ph);
  channels.emplace_back(ComplexMatrix::outer(4, 0, 3), params.gamma30, n_ph);
  channels.emplace_back(ComplexMatrix::outer(4, 3, 2), params.load_rate, 0.0);
  return SystemModel(ComplexMatrix::diagonal(levels), ComplexMatrix::outer(4, 0, 1), params.gamma01,
                     std::move(channels));
}

double max_block_coherence(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("photocell state must be 4x4");
  double m = 0.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 2; c < 4; ++c) m = std::max({m, std::abs(rho(r, c)), std::abs(rho(c, r))});
  return m;
}

DonorAcceptorSplit donor_acceptor_split(const ComplexMatrix& rho, const SystemModel& model, Complex g,
                                        Complex dg, const ComplexMatrix& rho_dot) {
  if (model.dim() != 4 || rho_dot.dim() != 4) throw DimensionError("donor_acceptor_split: 4-level model required");
  const double coherence = max_block_coherence(rho);
  if (coherence > kMaxBlockCoherence) {
    std::ostringstream os;
    os << "donor/acceptor coherence " << coherence << " exceeds " << kMaxBlockCoherence;
    throw ModelViolation(os.str());
  }

  const ComplexMatrix h_sys = system_hamiltonian(model, g);
  const ComplexMatrix h_donor = h_sys.block(0, 2);
  const ComplexMatrix h_acceptor = h_sys.block(2, 2);
  const ComplexMatrix rho_d = rho.block(0, 2);
  const ComplexMatrix rho_a = rho.block(2, 2);

  DonorAcceptorSplit out;
  out.donor_energy = real_trace_product(rho_d, h_donor);
  out.acceptor_energy = real_trace_product(rho_a, h_acceptor);
  out.donor_heat = real_trace_product(rho_dot.block(0, 2), h_donor);
  out.acceptor_heat = real_trace_product(rho_dot.block(2, 2), h_acceptor);
  out.donor_power = real_trace_product(rho_d, drive_hamiltonian_rate(model, dg).block(0, 2));
  out.donor_entropy = spectral_entropy(rho_d);
  out.acceptor_entropy = spectral_entropy(rho_a);

  const double e_total = energy(rho, model, g);
  const double j_total = heat_current(rho_dot, model, g);
  const double s_total = spectral_entropy(rho);
  if (std::abs(out.donor_energy + out.acceptor_energy - e_total) > kSplitTol ||
      std::abs(out.donor_heat + out.acceptor_heat - j_total) > kSplitTol ||
      std::abs(out.donor_entropy + out.acceptor_entropy - s_total) > kSplitTol) {
    throw ModelViolation("donor/acceptor parts do not add up to the totals");
  }
  return out;
}

ElectricalRecord electrical(const ComplexMatrix& rho, const PhotocellParams& params, double kt_ev,
                            double donor_power) {
  if (rho.dim() != 4) throw DimensionError("electrical: photocell state must be 4x4");
  const double rho22 = rho(2, 2).real();
  const double rho33 = rho(3, 3).real();
  if (rho22 < -kClampWindow || rho33 < -kClampWindow) throw PositivityError("electrical: negative population");

  const auto levels = params.level_energies_ev();
  ElectricalRecord rec;
  rec.current = params.load_rate * std::max(rho22, 0.0);
  rec.voltage = std::min(rho22, rho33) > kVoltagePopulationFloor
                    ? levels[2] - levels[3] + kt_ev * std::log(rho22 / rho33)
                    : kNaN;
  // I [e w0] * V [eV/e] -> hbar w0 * w0 units.
  rec.output_power = rec.current == 0.0 ? 0.0 : rec.current * rec.voltage / params.donor_gap_ev;
  rec.donor_power = donor_power;
  rec.efficiency = donor_power > kDonorPowerFloor ? rec.output_power / donor_power : kNaN;
  return rec;
}

EfficiencySmoother::EfficiencySmoother(std::size_t window) : window_(window) {
  if (window_ == 0) throw DomainError("EfficiencySmoother: window must be >= 1");
}

double EfficiencySmoother::push(double output_power, double donor_power) {
  const bool undefined = std::isnan(output_power);
  samples_.emplace_back(output_power, donor_power);
  if (undefined) ++undefined_; else sum_out_ += output_power;
  sum_in_ += donor_power;
  if (samples_.size() > window_) {
    const auto [out, in] = samples_.front();
    samples_.pop_front();
    if (std::isnan(out)) --undefined_; else sum_out_ -= out;
    sum_in_ -= in;
  }
  const double n = static_cast<double>(samples_.size());
  if (undefined_ > 0 || !(sum_in_ / n > kDonorPowerFloor)) return kNaN;
  return sum_out_ / sum_in_;
}

}  // namespace qpulse
