#include "qpulse/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "qpulse/ensemble.hpp"
#include "qpulse/errors.hpp"
#include "qpulse/scenario.hpp"

namespace qpulse {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string sci(double v) { return fmt("%.3e", v); }
std::string fix(double v) { return fmt("%.4f", v); }

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Undriven amplitude damping at zero temperature.
SystemModel decay_model() {
  TwoLevelParams p;
  p.gamma = 1e-2;
  p.nbar_override = 0.0;
  return build_two_level(p);
}

DensityOperator plus_state() {
  const Complex a = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> psi{a, a};
  return DensityOperator::pure(psi);
}

double decay_error(double dt, double t) {
  const SystemModel model = decay_model();
  const PulseSequence dark;
  IntegrationConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t;
  cfg.record_every = 1;
  const auto rho0 = plus_state();
  const auto result = evolve(model, dark, rho0, cfg);
  const auto exact = analytic_decay(rho0, 1e-2, t);
  return max_abs_diff(result.final_state.matrix(), exact.matrix());
}

CriterionResult bose_check() {
  CriterionResult r{"1", "Bose occupations", "n(1 eV,300 K)=6.5e-31 (x1.1); n(1.8 eV,5800 K)=0.0317", "", "factor 1.1; +-5e-4"};
  const double n1 = bose_occupation(1.0, 300.0);
  const double n2 = bose_occupation(1.8, 5800.0);
  const bool ok1 = n1 > 0.0 && std::abs(std::log(n1 / 6.5e-31)) <= std::log(1.1);
  const bool ok2 = std::abs(n2 - 0.0317) <= 5e-4;
  r.got = sci(n1) + "; " + fmt("%.5f", n2);
  r.passed = ok1 && ok2;
  return r;
}

CriterionResult decay_check(double dt) {
  CriterionResult r{"2", "Analytic decay oracle", "max|rho - rho_exact| at gamma t = 0.5, 1, 2", "", "<= 1e-6"};
  try {
    double worst = 0.0;
    for (double gt : {0.5, 1.0, 2.0}) worst = std::max(worst, decay_error(dt, gt / 1e-2));
    r.got = sci(worst);
    r.passed = worst <= 1e-6;
  } catch (const std::exception& e) {
    r.got = std::string("error: ") + e.what();
  }
  return r;
}

CriterionResult order_check(double dt) {
  CriterionResult r{"3", "RK4 convergence order", "log-log error slope 4", "", "+-0.3"};
  try {
    const double steps[] = {2.0 * dt, dt, 0.5 * dt};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double h : steps) {
      const double x = std::log(h);
      const double y = std::log(decay_error(h, 200.0));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    r.got = fmt("%.3f", slope);
    r.passed = std::abs(slope - 4.0) <= 0.3;
  } catch (const std::exception& e) {
    r.got = std::string("error: ") + e.what();
  }
  return r;
}

double pulse_norm() {
  const GaussianPulse p{0.0, 1.0 / (4.0 * 3.14159265358979323846)};
  const double h = 0.01 / p.bandwidth;
  const double reach = GaussianPulse::kTruncation / p.bandwidth;
  const auto n = static_cast<long>(std::llround(2.0 * reach / h));
  double sum = 0.0;
  for (long k = 0; k <= n; ++k) {
    const double w = (k == 0 || k == n) ? 0.5 : 1.0;
    sum += w * std::norm(p.value(-reach + static_cast<double>(k) * h));
  }
  return sum * h;
}

double derivative_error() {
  const GaussianPulse p{0.0, 1.0 / (4.0 * 3.14159265358979323846)};
  const double h = 1e-4;
  double max_diff = 0.0, max_ref = 0.0;
  for (double t = -8.0 / p.bandwidth; t <= 8.0 / p.bandwidth; t += 0.37) {
    const Complex fd = (p.value(t + h) - p.value(t - h)) / (2.0 * h);
    const Complex an = p.derivative(t);
    max_diff = std::max(max_diff, std::abs(fd - an));
    max_ref = std::max(max_ref, std::abs(an));
  }
  return max_diff / max_ref;
}

struct Series {
  std::vector<double> t;
  std::vector<double> eta;
};

Series smoothed_eta(const ScenarioResult& r) {
  Series s;
  for (const auto& row : r.rows) {
    s.t.push_back(row.thermo.t);
    s.eta.push_back(row.photocell ? row.photocell->efficiency_smoothed : kNaN);
  }
  return s;
}

// Min and max of the defined samples with t >= from.
std::pair<double, double> range_after(const Series& s, double from) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    if (s.t[i] < from || std::isnan(s.eta[i])) continue;
    lo = std::min(lo, s.eta[i]);
    hi = std::max(hi, s.eta[i]);
  }
  if (lo > hi) return {kNaN, kNaN};
  return {lo, hi};
}

double final_eta(const ScenarioResult& r) {
  return r.rows.empty() || !r.rows.back().photocell ? kNaN : r.rows.back().photocell->efficiency_smoothed;
}

ScenarioConfig open_circuit(bool cold_phonons) {
  ScenarioConfig c = preset("fig8b");
  c.name = cold_phonons ? "open-circuit-cold" : "open-circuit";
  c.photocell.load_rate = 0.0;
  // At 1 K both thermal occupations underflow to zero.
  if (cold_phonons) c.photocell.tc_kelvin = 1.0;
  return c;
}

std::pair<double, double> open_circuit_extremes(const ScenarioResult& r) {
  double max_i = 0.0, max_p3 = 0.0;
  for (const auto& row : r.rows) {
    max_i = std::max(max_i, std::abs(row.photocell->electrical.current));
    max_p3 = std::max(max_p3, row.photocell->populations[3]);
  }
  return {max_i, max_p3};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(bose_check());
  out.push_back(decay_check(opts.dt));
  out.push_back(order_check(opts.dt));

  // Every preset plus the open-circuit and work-ordering runs go through one
  // batch so they share the thread pool.
  std::vector<ScenarioConfig> configs;
  std::map<std::string, std::size_t> index;
  auto add = [&](ScenarioConfig c) {
    index[c.name] = configs.size();
    configs.push_back(std::move(c));
  };
  for (const auto& name : preset_names()) add(preset(name));
  add(open_circuit(false));
  add(open_circuit(true));

  constexpr int kSeeds = 20;
  ScenarioConfig regular = preset("fig4");
  regular.name = "order-regular";
  add(regular);
  for (int s = 1; s <= kSeeds; ++s) {
    ScenarioConfig irr = preset("fig5");
    irr.pulses.seed = static_cast<std::uint64_t>(s);
    irr.name = "order-irregular-" + std::to_string(s);
    add(irr);
  }

  BatchOptions bopts;
  bopts.jobs = opts.jobs;
  bopts.keep_results = true;
  const auto outcomes = run_batch(configs, bopts);
  auto get = [&](const std::string& name) -> const RunOutcome& { return outcomes[index.at(name)]; };
  auto failure = [&](const std::string& name) -> std::string {
    const auto& o = get(name);
    return o.status == RunStatus::Ok ? "" : name + " " + std::string(to_string(o.status)) + ": " + o.error;
  };

  {
    CriterionResult r{"4", "First-law closure", "max |dE/dt - J - P| on fig2, fig7", "", "<= 1e-8"};
    if (auto f = failure("fig2") + failure("fig7"); !f.empty()) {
      r.got = f;
    } else {
      const double a = get("fig2").summary.max_first_law_residual;
      const double b = get("fig7").summary.max_first_law_residual;
      r.got = "fig2 " + sci(a) + ", fig7 " + sci(b);
      r.passed = a <= 1e-8 && b <= 1e-8;
    }
    out.push_back(r);
  }
  {
    CriterionResult r{"5", "Second law", "min sigma(t) on fig2", "", ">= -1e-6"};
    if (auto f = failure("fig2"); !f.empty()) {
      r.got = f;
    } else {
      const auto s = get("fig2").summary.min_entropy_production;
      r.got = s ? sci(*s) : "undefined";
      r.passed = s && *s >= -1e-6;
    }
    out.push_back(r);
  }
  {
    CriterionResult r{"6", "Heat-current sign", "max J(t) on fig2", "", "<= 1e-12"};
    if (auto f = failure("fig2"); !f.empty()) {
      r.got = f;
    } else {
      double max_j = -std::numeric_limits<double>::infinity();
      for (const auto& row : get("fig2").result->rows) max_j = std::max(max_j, row.thermo.heat_current);
      r.got = sci(max_j);
      r.passed = max_j <= 1e-12;
    }
    out.push_back(r);
  }
  {
    CriterionResult r{"7", "Entropy additivity", "max |S - S_D - S_A| on fig7", "", "<= 1e-9"};
    if (auto f = failure("fig7"); !f.empty()) {
      r.got = f;
    } else {
      double worst = 0.0;
      for (const auto& row : get("fig7").result->rows) {
        const auto& sp = row.photocell->split;
        worst = std::max(worst, std::abs(row.thermo.entropy - sp.donor_entropy - sp.acceptor_entropy));
      }
      r.got = sci(worst);
      r.passed = worst <= 1e-9;
    }
    out.push_back(r);
  }
  {
    CriterionResult r{"8", "Continuum efficiency",
                      "fig8b eta=0.36; |fig7-fig8b|; last-quarter peak-to-peak", "", "+-0.05; <=0.05; <0.05"};
    if (auto f = failure("fig7") + failure("fig8b"); !f.empty()) {
      r.got = f;
    } else {
      const auto& r7 = *get("fig7").result;
      const auto& r8 = *get("fig8b").result;
      const double e7 = final_eta(r7);
      const double e8 = final_eta(r8);
      const double tq = 0.75 * r8.config.integration.t_end;
      const auto [lo8, hi8] = range_after(smoothed_eta(r8), tq);
      const auto [lo7, hi7] = range_after(smoothed_eta(r7), tq);
      const double ptp = std::max(hi8 - lo8, hi7 - lo7);
      const bool value_ok = std::abs(e8 - 0.36) <= 0.05;
      const bool same_ok = std::abs(e7 - e8) <= 0.05;
      const bool flat_ok = ptp < 0.05;
      r.got = "fig8b " + fix(e8) + (value_ok ? "" : " [value off]") + ", fig7 " + fix(e7) +
              (same_ok ? "" : " [mismatch]") + ", p2p " + fix(ptp) + (flat_ok ? "" : " [oscillating]");
      r.passed = value_ok && same_ok && flat_ok;
    }
    out.push_back(r);
  }
  {
    CriterionResult r{"9", "Discrete-mode oscillation", "fig8a eta min in [0.15,0.25], max in [0.55,0.65]", "",
                      "+-0.05 band"};
    if (auto f = failure("fig8a"); !f.empty()) {
      r.got = f;
    } else {
      const auto& ra = *get("fig8a").result;
      const auto [lo, hi] = range_after(smoothed_eta(ra), 0.5 * ra.config.integration.t_end);
      r.got = "min " + fix(lo) + ", max " + fix(hi);
      r.passed = std::abs(lo - 0.2) <= 0.05 && std::abs(hi - 0.6) <= 0.05;
    }
    out.push_back(r);
  }
  {
    CriterionResult r{"10", "Work ordering", "regular W > irregular W in >= 15 of 20 seeds", "", ">= 15/20"};
    std::string f = failure("order-regular");
    int wins = 0, failed = 0;
    const double w_reg = get("order-regular").summary.final_work;
    for (int s = 1; s <= kSeeds; ++s) {
      const auto& o = get("order-irregular-" + std::to_string(s));
      if (o.status != RunStatus::Ok) {
        ++failed;
        continue;
      }
      if (w_reg > o.summary.final_work) ++wins;
    }
    if (!f.empty()) {
      r.got = f;
    } else {
      r.got = std::to_string(wins) + "/20 (W_reg " + sci(w_reg) + ")" +
              (failed ? ", " + std::to_string(failed) + " failed" : "");
      r.passed = wins >= 15;
    }
    out.push_back(r);
  }
  {
    CriterionResult r{"11", "Invariant suite",
                      "trace drift, Hermiticity, min eigenvalue on presets; pulse norm; dg/dt vs FD", "",
                      "1e-9; 1e-12; -1e-6; 1+-1e-6; 1e-5 rel"};
    std::string f;
    double drift = 0.0, herm = 0.0, min_eig = 1.0;
    for (const auto& name : preset_names()) {
      f += failure(name);
      const auto& st = get(name).summary.stats;
      drift = std::max(drift, st.max_trace_drift);
      herm = std::max(herm, st.max_hermiticity_error);
      min_eig = std::min(min_eig, st.min_record_eigenvalue);
    }
    const double norm = pulse_norm();
    const double deriv = derivative_error();
    if (!f.empty()) {
      r.got = f;
    } else {
      r.got = "drift " + sci(drift) + ", herm " + sci(herm) + ", min eig " + sci(min_eig) + ", norm-1 " +
              sci(norm - 1.0) + ", dg " + sci(deriv);
      r.passed = drift <= 1e-9 && herm <= 1e-12 && min_eig >= -1e-6 && std::abs(norm - 1.0) <= 1e-6 &&
                 deriv <= 1e-5;
    }
    out.push_back(r);
  }
  for (const bool cold : {false, true}) {
    const std::string name = cold ? "open-circuit-cold" : "open-circuit";
    CriterionResult r{cold ? "12i" : "12",
                      cold ? "Open circuit, no thermal phonons (info)" : "Open circuit (Gamma = 0)",
                      "max |I| = 0, max rho33", "", "0; <= 1e-12"};
    r.counted = !cold;
    if (auto f = failure(name); !f.empty()) {
      r.got = f;
    } else {
      const auto [max_i, max_p3] = open_circuit_extremes(*get(name).result);
      r.got = "max|I| " + sci(max_i) + ", max rho33 " + sci(max_p3);
      r.passed = max_i == 0.0 && max_p3 <= 1e-12;
    }
    out.push_back(r);
  }
  return out;
}

std::string format_report(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  char line[1024];
  for (const auto& r : results) {
    const char* verdict = r.passed ? "PASS" : (r.counted ? "FAIL" : "info");
    std::snprintf(line, sizeof line, "%-4s %-4s %-38s expected: %s | got: %s | tol: %s\n", verdict,
                  r.id.c_str(), r.name.c_str(), r.expected.c_str(), r.got.c_str(), r.tolerance.c_str());
    os << line;
  }
  return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed || !r.counted; });
}

}  // namespace qpulse
