#include "qpulse/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qpulse/errors.hpp"
#include "qpulse/units.hpp"

namespace qpulse {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = units::kTwoPi;
constexpr double kDefaultBandwidth = 1.0 / (4.0 * units::kPi);

std::string_view to_string(SystemKind s) { return s == SystemKind::TwoLevel ? "two-level" : "photocell"; }

SystemKind parse_system(std::string_view s) {
  if (s == "two-level") return SystemKind::TwoLevel;
  if (s == "photocell") return SystemKind::Photocell;
  throw ConfigError("system: unknown system '" + std::string(s) + "'");
}

std::string_view to_string(InitialState s) {
  switch (s) {
    case InitialState::Ground: return "ground";
    case InitialState::Excited: return "excited";
    case InitialState::Superposition: return "superposition";
  }
  return "ground";
}

InitialState parse_initial(std::string_view s) {
  if (s == "ground") return InitialState::Ground;
  if (s == "excited") return InitialState::Excited;
  if (s == "superposition") return InitialState::Superposition;
  throw ConfigError("initial-state: unknown state '" + std::string(s) + "'");
}

// Reads fields from a JSON object, qualifying errors with the dotted path and
// rejecting keys that were never read.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string prefix) : obj_(obj), prefix_(std::move(prefix)) {
    if (!obj_.is_object()) throw ConfigError(where("") + "expected an object");
  }

  void number(const char* key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) throw ConfigError(where(key) + "expected a number");
      out = v->get<double>();
    }
  }
  void optional_number(const char* key, std::optional<double>& out) {
    if (const json* v = find(key)) {
      if (v->is_null()) { out.reset(); return; }
      if (!v->is_number()) throw ConfigError(where(key) + "expected a number or null");
      out = v->get<double>();
    }
  }
  template <class Int>
  void integer(const char* key, Int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer() && !v->is_number_unsigned()) throw ConfigError(where(key) + "expected an integer");
      out = v->get<Int>();
    }
  }
  void string(const char* key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) throw ConfigError(where(key) + "expected a string");
      out = v->get<std::string>();
    }
  }
  const json* object(const char* key) { return find(key); }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!seen_.contains(key)) throw ConfigError(where(key.c_str()) + "unknown key");
    }
  }

  [[nodiscard]] std::string where(const char* key) const {
    std::string path = prefix_;
    if (*key) path += path.empty() ? key : std::string(".") + key;
    return path.empty() ? std::string("config: ") : path + ": ";
  }

 private:
  const json* find(const char* key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  const json& obj_;
  std::string prefix_;
  std::set<std::string> seen_;
};

json optional_to_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json to_json_value(const ScenarioConfig& c) {
  json j;
  j["name"] = c.name;
  j["system"] = std::string(to_string(c.system));
  j["two-level"] = {{"gap", c.two_level.gap_ev},
                    {"gamma", c.two_level.gamma},
                    {"tc", c.two_level.tc_kelvin},
                    {"nbar-override", optional_to_json(c.two_level.nbar_override)}};
  j["photocell"] = {{"donor-gap", c.photocell.donor_gap_ev},
                    {"acceptor-gap", c.photocell.acceptor_gap_ev},
                    {"gamma01", c.photocell.gamma01},
                    {"gamma12", c.photocell.gamma12},
                    {"gamma30", c.photocell.gamma30},
                    {"big-gamma", c.photocell.load_rate},
                    {"tc", c.photocell.tc_kelvin},
                    {"phonon-energy", optional_to_json(c.photocell.phonon_energy_ev)}};
  j["pulses"] = {{"mode", std::string(to_string(c.pulses.mode))},
                 {"count", c.pulses.count},
                 {"first-peak", c.pulses.first_peak},
                 {"spacing", c.pulses.spacing},
                 {"jitter", c.pulses.jitter},
                 {"seed", c.pulses.seed},
                 {"mean-photons", c.pulses.mean_photons},
                 {"phase", c.pulses.phase},
                 {"bandwidth", c.pulses.bandwidth},
                 {"duration", c.pulses.duration}};
  j["integration"] = {{"dt", c.integration.dt},
                      {"t-start", c.integration.t_start},
                      {"t-end", c.integration.t_end},
                      {"record-every", c.integration.record_every}};
  j["initial-state"] = c.initial ? json(std::string(to_string(*c.initial))) : json(nullptr);
  j["output"] = c.output;
  return j;
}

ScenarioConfig from_json_value(const json& j) {
  ScenarioConfig c;
  ObjectReader top(j, "");
  top.string("name", c.name);
  std::string system(to_string(c.system));
  top.string("system", system);
  c.system = parse_system(system);

  if (const json* tl = top.object("two-level")) {
    ObjectReader r(*tl, "two-level");
    r.number("gap", c.two_level.gap_ev);
    r.number("gamma", c.two_level.gamma);
    r.number("tc", c.two_level.tc_kelvin);
    r.optional_number("nbar-override", c.two_level.nbar_override);
    r.finish();
  }
  if (const json* pc = top.object("photocell")) {
    ObjectReader r(*pc, "photocell");
    r.number("donor-gap", c.photocell.donor_gap_ev);
    r.number("acceptor-gap", c.photocell.acceptor_gap_ev);
    r.number("gamma01", c.photocell.gamma01);
    r.number("gamma12", c.photocell.gamma12);
    r.number("gamma30", c.photocell.gamma30);
    r.number("big-gamma", c.photocell.load_rate);
    r.number("tc", c.photocell.tc_kelvin);
    r.optional_number("phonon-energy", c.photocell.phonon_energy_ev);
    r.finish();
  }
  if (const json* p = top.object("pulses")) {
    ObjectReader r(*p, "pulses");
    std::string mode(to_string(c.pulses.mode));
    r.string("mode", mode);
    try {
      c.pulses.mode = parse_pulse_mode(mode);
    } catch (const ConfigError& e) {
      throw ConfigError("pulses.mode: " + std::string(e.what()));
    }
    r.integer("count", c.pulses.count);
    r.number("first-peak", c.pulses.first_peak);
    r.number("spacing", c.pulses.spacing);
    r.number("jitter", c.pulses.jitter);
    r.integer("seed", c.pulses.seed);
    r.number("mean-photons", c.pulses.mean_photons);
    r.number("phase", c.pulses.phase);
    r.number("bandwidth", c.pulses.bandwidth);
    r.number("duration", c.pulses.duration);
    r.finish();
  }
  if (const json* in = top.object("integration")) {
    ObjectReader r(*in, "integration");
    r.number("dt", c.integration.dt);
    r.number("t-start", c.integration.t_start);
    r.number("t-end", c.integration.t_end);
    r.integer("record-every", c.integration.record_every);
    r.finish();
  }
  if (const json* init = top.object("initial-state")) {
    if (init->is_null()) {
      c.initial.reset();
    } else if (init->is_string()) {
      c.initial = parse_initial(init->get<std::string>());
    } else {
      throw ConfigError("initial-state: expected a string or null");
    }
  }
  top.string("output", c.output);
  top.finish();
  return c;
}

void write_field(std::ostream& os, double v) {
  os << ',';
  if (std::isnan(v)) return;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

std::size_t smoothing_window(const IntegrationConfig& in) {
  const double record_dt = in.effective_dt() * static_cast<double>(in.record_every);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(10.0 * kTwoPi / record_dt)));
}

}  // namespace

PulseSequence PulseSpec::build() const {
  const Complex alpha = std::polar(std::sqrt(mean_photons), phase);
  switch (mode) {
    case PulseMode::Regular: return build_regular(count, first_peak, spacing, bandwidth, alpha);
    case PulseMode::Irregular:
      return build_irregular(count, first_peak, spacing, jitter, seed, bandwidth, alpha);
    case PulseMode::Continuum: return build_continuum(first_peak, duration, spacing, bandwidth, alpha);
  }
  throw ConfigError("pulses.mode: unknown");
}

void ScenarioConfig::validate() const {
  auto qualify = [](const char* section, auto&& fn) {
    try {
      fn();
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      throw ConfigError(msg.rfind(section, 0) == 0 ? msg : std::string(section) + ": " + msg);
    }
  };
  if (system == SystemKind::TwoLevel) qualify("two-level", [&] { two_level.validate(); });
  else qualify("photocell", [&] { photocell.validate(); });
  qualify("pulses", [&] {
    if (!(pulses.mean_photons >= 0.0)) throw ConfigError("pulses.mean-photons must be >= 0");
    (void)pulses.build();
  });
  qualify("integration", [&] { integration.validate(); });
}

InitialState ScenarioConfig::initial_state() const {
  if (initial) return *initial;
  return system == SystemKind::TwoLevel ? InitialState::Superposition : InitialState::Ground;
}

std::vector<std::string> preset_names() { return {"fig2", "fig3", "fig4", "fig5", "fig7", "fig8a", "fig8b"}; }

ScenarioConfig preset(std::string_view name) {
  ScenarioConfig c;
  c.name = std::string(name);
  c.integration.dt = 0.02;
  c.integration.record_every = 10;
  c.output = c.name + ".csv";

  const double period = kTwoPi;
  if (name == "fig2" || name == "fig3" || name == "fig4" || name == "fig5") {
    c.system = SystemKind::TwoLevel;
    c.pulses.first_peak = 50.0 * period;
    c.pulses.spacing = 50.0 * period;
    c.pulses.bandwidth = kDefaultBandwidth;
    c.pulses.mean_photons = name == "fig3" ? 10.0 : 1.0;
    c.pulses.count = (name == "fig2" || name == "fig3") ? 5 : 8;
    c.pulses.mode = name == "fig5" ? PulseMode::Irregular : PulseMode::Regular;
    c.pulses.jitter = 0.3;
    c.pulses.seed = 1;
    c.integration.t_end = (c.pulses.count + 1) * c.pulses.spacing;
    c.initial = InitialState::Superposition;
    return c;
  }
  if (name == "fig7" || name == "fig8a" || name == "fig8b") {
    c.system = SystemKind::Photocell;
    c.pulses.bandwidth = kDefaultBandwidth;
    c.pulses.first_peak = 10.0 * period;
    c.pulses.mean_photons = name == "fig7" ? 10.0 : 1.0;
    c.integration.t_end = 2500.0;
    // The train runs one truncation radius past t_end so the drive does not
    // ramp down inside the final smoothing window.
    const double span = c.integration.t_end + GaussianPulse::kTruncation / kDefaultBandwidth - c.pulses.first_peak;
    if (name == "fig8a") {
      c.pulses.mode = PulseMode::Regular;
      c.pulses.spacing = 8.0 / kDefaultBandwidth;
      c.pulses.count = static_cast<int>(span / c.pulses.spacing) + 1;
    } else {
      c.pulses.mode = PulseMode::Continuum;
      c.pulses.spacing = 1.0 / kDefaultBandwidth;
      c.pulses.duration = span;
    }
    c.initial = InitialState::Ground;
    return c;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

std::string to_json(const ScenarioConfig& cfg) { return to_json_value(cfg).dump(2); }

ScenarioConfig config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  try {
    return from_json_value(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

ScenarioConfig with_parameter(const ScenarioConfig& cfg, std::string_view path, double value) {
  json j = to_json_value(cfg);
  json* node = &j;
  std::string remaining(path);
  std::string key;
  for (;;) {
    const auto dot = remaining.find('.');
    key = remaining.substr(0, dot);
    if (!node->is_object() || !node->contains(key)) {
      throw ConfigError("sweep: unknown parameter '" + std::string(path) + "'");
    }
    if (dot == std::string::npos) break;
    node = &(*node)[key];
    remaining = remaining.substr(dot + 1);
  }
  json& leaf = (*node)[key];
  if (leaf.is_number_integer() || leaf.is_number_unsigned()) {
    if (value != std::floor(value)) throw ConfigError("sweep: parameter '" + std::string(path) + "' needs an integer");
    leaf = static_cast<std::int64_t>(value);
  } else if (leaf.is_number_float() || leaf.is_null()) {
    leaf = value;
  } else {
    throw ConfigError("sweep: parameter '" + std::string(path) + "' is not numeric");
  }
  return from_json_value(j);
}

SystemModel build_model(const ScenarioConfig& cfg) {
  return cfg.system == SystemKind::TwoLevel ? build_two_level(cfg.two_level) : build_photocell(cfg.photocell);
}

DensityOperator build_initial_state(const ScenarioConfig& cfg) {
  const std::size_t dim = cfg.system == SystemKind::TwoLevel ? 2 : 4;
  switch (cfg.initial_state()) {
    case InitialState::Ground: return DensityOperator::basis(dim, 0);
    case InitialState::Excited: return DensityOperator::basis(dim, 1);
    case InitialState::Superposition: {
      std::vector<Complex> psi(dim, 0.0);
      psi[0] = psi[1] = 1.0 / std::sqrt(2.0);
      return DensityOperator::pure(psi);
    }
  }
  return DensityOperator::basis(dim, 0);
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const SystemModel model = build_model(cfg);
  const PulseSequence drive = cfg.pulses.build();
  const bool photocell = cfg.system == SystemKind::Photocell;
  const std::optional<double> beta =
      photocell ? std::nullopt : std::optional<double>(cfg.two_level.beta());
  const double kt_ev = cfg.photocell.thermal_energy_ev();

  ScenarioResult result{cfg, {}, {}};
  result.rows.reserve(static_cast<std::size_t>(cfg.integration.steps() / cfg.integration.record_every) + 1);
  std::optional<EfficiencySmoother> smoother;
  if (photocell) smoother.emplace(smoothing_window(cfg.integration));

  const auto observer = [&](const Snapshot& snap) {
    RecordRow row;
    row.thermo = thermo_snapshot(snap, model, beta);
    row.rho00 = snap.rho(0, 0);
    row.rho01 = snap.rho(0, 1);
    row.rho11 = snap.rho(1, 1);
    row.g = snap.g;
    if (photocell) {
      PhotocellRow pc;
      const ComplexMatrix rho_dot = liouvillian_apply(model, snap.g, snap.rho);
      pc.split = donor_acceptor_split(snap.rho, model, snap.g, snap.dg, rho_dot);
      pc.electrical = electrical(snap.rho, cfg.photocell, kt_ev, pc.split.donor_power);
      pc.efficiency_smoothed = smoother->push(pc.electrical.output_power, pc.electrical.donor_power);
      for (std::size_t k = 0; k < 4; ++k) pc.populations[k] = snap.rho(k, k).real();
      row.photocell = pc;
    }
    result.rows.push_back(std::move(row));
  };

  const auto evolved = evolve(model, drive, build_initial_state(cfg), cfg.integration, observer);

  std::vector<ThermoRecord> thermo;
  thermo.reserve(result.rows.size());
  for (const auto& r : result.rows) thermo.push_back(r.thermo);
  accumulate(thermo);

  auto& s = result.summary;
  s.stats = evolved.stats;
  for (std::size_t i = 0; i < thermo.size(); ++i) {
    result.rows[i].thermo = thermo[i];
    s.max_first_law_residual = std::max(s.max_first_law_residual, thermo[i].first_law_residual);
    if (const auto& sigma = thermo[i].entropy_production) {
      s.min_entropy_production = std::min(s.min_entropy_production.value_or(*sigma), *sigma);
    }
  }
  if (!thermo.empty()) {
    s.final_work = thermo.back().work;
    s.final_heat = thermo.back().heat;
    s.final_entropy = thermo.back().entropy;
    s.energy_change = thermo.back().energy - thermo.front().energy;
  }
  if (photocell && !result.rows.empty()) {
    const double eta = result.rows.back().photocell->efficiency_smoothed;
    if (!std::isnan(eta)) s.final_efficiency = eta;
  }
  return result;
}

std::vector<std::string> csv_columns(SystemKind system) {
  std::vector<std::string> cols{"t", "rho00_re", "rho01_re", "rho01_im", "rho11_re", "g_re", "g_im", "E",
                                "P", "J", "W", "Q", "S", "dSdt", "sigma", "residual"};
  if (system == SystemKind::Photocell) {
    for (const char* c : {"I", "V", "Pout", "PD", "eta", "E_D", "E_A", "J_D", "J_A", "S_D", "S_A", "rho00",
                          "rho11", "rho22", "rho33", "eta_inst"})
      cols.emplace_back(c);
  }
  return cols;
}

void write_csv(std::ostream& os, const ScenarioResult& result) {
  const auto cols = csv_columns(result.config.system);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  char buf[32];
  for (const auto& r : result.rows) {
    std::snprintf(buf, sizeof buf, "%.17g", r.thermo.t);
    os << buf;
    const auto& th = r.thermo;
    for (double v : {r.rho00.real(), r.rho01.real(), r.rho01.imag(), r.rho11.real(), r.g.real(), r.g.imag(),
                     th.energy, th.power, th.heat_current, th.work, th.heat, th.entropy, th.entropy_rate,
                     th.entropy_production.value_or(kNaN), th.first_law_residual})
      write_field(os, v);
    if (const auto& pc = r.photocell) {
      const auto& e = pc->electrical;
      const auto& sp = pc->split;
      for (double v : {e.current, e.voltage, e.output_power, e.donor_power, pc->efficiency_smoothed,
                       sp.donor_energy, sp.acceptor_energy, sp.donor_heat, sp.acceptor_heat, sp.donor_entropy,
                       sp.acceptor_entropy, pc->populations[0], pc->populations[1], pc->populations[2],
                       pc->populations[3], e.efficiency})
        write_field(os, v);
    }
    os << '\n';
  }
}

std::string format_summary(const ScenarioResult& result) {
  const auto& c = result.config;
  const auto& s = result.summary;
  std::ostringstream os;
  os.precision(10);
  os << "scenario " << c.name << " (" << to_string(c.system) << ", " << to_string(c.pulses.mode)
     << " pulses, <n> = " << c.pulses.mean_photons << ")\n";
  os << "  records            " << result.rows.size() << " over " << s.stats.steps << " steps\n";
  os << "  final W            " << s.final_work << '\n';
  os << "  final Q            " << s.final_heat << '\n';
  os << "  delta E            " << s.energy_change << '\n';
  os << "  final S            " << s.final_entropy << '\n';
  os << "  min sigma          ";
  if (s.min_entropy_production) os << *s.min_entropy_production; else os << "n/a (multi-reservoir)";
  os << '\n';
  os << "  max |dE/dt-J-P|    " << s.max_first_law_residual << '\n';
  if (c.system == SystemKind::Photocell) {
    os << "  final eta_p        ";
    if (s.final_efficiency) os << *s.final_efficiency; else os << "undefined";
    os << '\n';
  }
  return os.str();
}

}  // namespace qpulse
