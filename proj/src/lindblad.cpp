#include "qpulse/lindblad.hpp"

#include <cmath>
#include <string>

#include "qpulse/errors.hpp"

namespace qpulse {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_dim(const ComplexMatrix& m, std::size_t dim, const char* what) {
  if (m.dim() != dim) {
    throw DimensionError(std::string(what) + ": expected dim " + std::to_string(dim) + ", got " +
                         std::to_string(m.dim()));
  }
}

// 2 L rho L^+ - L^+L rho - rho L^+L, scaled by w and added to out.
void add_lindblad_term(ComplexMatrix& out, const ComplexMatrix& l, const ComplexMatrix& l_adj,
                       const ComplexMatrix& anti, double w, const ComplexMatrix& rho) {
  if (w == 0.0) return;
  ComplexMatrix term = l * rho * l_adj;
  term *= 2.0;
  term -= anti * rho;
  term -= rho * anti;
  out.add_scaled(term, w);
}

}  // namespace

DissipationChannel::DissipationChannel(ComplexMatrix jump_op, double rate_, double occupation_)
    : jump(std::move(jump_op)), rate(rate_), occupation(occupation_) {
  if (!(rate >= 0.0)) throw DomainError("DissipationChannel: rate must be >= 0");
  if (!(occupation >= 0.0)) throw DomainError("DissipationChannel: occupation must be >= 0");
}

SystemModel::SystemModel(ComplexMatrix h0_, ComplexMatrix drive_lower_, double drive_rate_,
                         std::vector<DissipationChannel> channels_)
    : h0(std::move(h0_)), drive_lower(std::move(drive_lower_)), drive_rate(drive_rate_),
      channels(std::move(channels_)) {
  const std::size_t n = h0.dim();
  require_dim(drive_lower, n, "SystemModel drive operator");
  for (const auto& ch : channels) require_dim(ch.jump, n, "SystemModel channel");
  if (h0.hermiticity_error() > 1e-12) throw DomainError("SystemModel: h0 is not Hermitian");
  if (!(drive_rate >= 0.0)) throw DomainError("SystemModel: drive rate must be >= 0");

  // In the (diagonal) energy basis, the drive operator must only connect a
  // level to a strictly lower one.
  bool diagonal = true;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && h0(r, c) != Complex{}) diagonal = false;
  if (diagonal) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (drive_lower(r, c) != Complex{} && !(h0(r, r).real() < h0(c, c).real())) {
          throw DomainError("SystemModel: drive operator is not a pure lowering operator");
        }
  }
}

ComplexMatrix dissipator_apply(const DissipationChannel& channel, const ComplexMatrix& rho) {
  require_dim(rho, channel.jump.dim(), "dissipator_apply");
  const ComplexMatrix& l = channel.jump;
  const ComplexMatrix l_adj = l.adjoint();
  ComplexMatrix out(rho.dim());
  add_lindblad_term(out, l, l_adj, l_adj * l, 0.5 * channel.rate * (channel.occupation + 1.0), rho);
  add_lindblad_term(out, l_adj, l, l * l_adj, 0.5 * channel.rate * channel.occupation, rho);
  return out;
}

ComplexMatrix dissipator_total(const SystemModel& model, const ComplexMatrix& rho) {
  require_dim(rho, model.dim(), "dissipator_total");
  ComplexMatrix out(rho.dim());
  for (const auto& ch : model.channels) out += dissipator_apply(ch, rho);
  return out;
}

ComplexMatrix drive_hamiltonian(const SystemModel& model, Complex g) {
  const double root = std::sqrt(model.drive_rate);
  ComplexMatrix h = model.drive_lower;
  h *= kI * root * std::conj(g);
  h.add_scaled(model.drive_lower.adjoint(), -kI * root * g);
  return h;
}

ComplexMatrix system_hamiltonian(const SystemModel& model, Complex g) {
  return model.h0 + drive_hamiltonian(model, g);
}

ComplexMatrix drive_hamiltonian_rate(const SystemModel& model, Complex dg) {
  return drive_hamiltonian(model, dg);  // h1 is linear in g
}

ComplexMatrix liouvillian_apply(const SystemModel& model, Complex drive_amp, const ComplexMatrix& rho) {
  require_dim(rho, model.dim(), "liouvillian_apply");
  ComplexMatrix out = commutator(system_hamiltonian(model, drive_amp), rho);
  out *= -kI;
  out += dissipator_total(model, rho);
  return out;
}

Liouvillian::Liouvillian(const SystemModel& model) : model_(model) {
  for (const auto& ch : model_.channels) {
    const ComplexMatrix l_adj = ch.jump.adjoint();
    const double down = 0.5 * ch.rate * (ch.occupation + 1.0);
    const double up = 0.5 * ch.rate * ch.occupation;
    if (down != 0.0) terms_.push_back({ch.jump, l_adj, l_adj * ch.jump, down});
    if (up != 0.0) terms_.push_back({l_adj, ch.jump, ch.jump * l_adj, up});
  }
}

ComplexMatrix Liouvillian::apply(Complex drive_amp, const ComplexMatrix& rho) const {
  require_dim(rho, model_.dim(), "Liouvillian::apply");
  ComplexMatrix h = model_.h0;
  if (drive_amp != Complex{}) h += drive_hamiltonian(model_, drive_amp);
  ComplexMatrix out = h * rho;
  out -= rho * h;
  out *= -kI;
  for (const auto& t : terms_) add_lindblad_term(out, t.jump, t.jump_adj, t.anti, t.weight, rho);
  return out;
}

}  // namespace qpulse
