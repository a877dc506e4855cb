// Command-line front end: simulate, sweep and check.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpulse/acceptance.hpp"
#include "qpulse/ensemble.hpp"
#include "qpulse/errors.hpp"
#include "qpulse/scenario.hpp"

namespace fs = std::filesystem;
using namespace qpulse;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kConfig = 2, kIntegration = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string preset;
  std::string config_path;
  std::string output;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<std::int64_t> record_every;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  auto* p = cmd->add_option("--preset", a.preset, "embedded scenario (fig2 fig3 fig4 fig5 fig7 fig8a fig8b)");
  auto* c = cmd->add_option("--config", a.config_path, "JSON scenario file");
  p->excludes(c);
  cmd->add_option("--dt", a.dt, "integration step, 1/w0");
  cmd->add_option("--t-end", a.t_end, "end time, 1/w0");
  cmd->add_option("--record-every", a.record_every, "steps between records");
  cmd->add_option("--seed", a.seed, "seed for irregular pulse trains");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioConfig load_config(const CommonArgs& a) {
  if (a.preset.empty() && a.config_path.empty()) throw ConfigError("one of --preset or --config is required");
  ScenarioConfig cfg = a.preset.empty() ? config_from_json(read_file(a.config_path)) : preset(a.preset);
  if (a.dt) cfg.integration.dt = *a.dt;
  if (a.t_end) cfg.integration.t_end = *a.t_end;
  if (a.record_every) cfg.integration.record_every = *a.record_every;
  if (a.seed) cfg.pulses.seed = *a.seed;
  return cfg;
}

fs::path output_dir() {
  const char* env = std::getenv("QPULSE_OUTPUT_DIR");
  return env && *env ? fs::path(env) : fs::current_path();
}

void write_result(const fs::path& path, const ScenarioResult& r) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(out, r);
  out.close();
  if (!out) throw IoError("write failed for " + path.string());
}

int cmd_simulate(const CommonArgs& a) {
  ScenarioConfig cfg = load_config(a);
  cfg.validate();
  const fs::path path = !a.output.empty()      ? fs::path(a.output)
                        : !cfg.output.empty()  ? output_dir() / cfg.output
                                               : output_dir() / (cfg.name + ".csv");
  const ScenarioResult r = run_scenario(cfg);
  write_result(path, r);
  std::cout << format_summary(r) << "  csv                " << path.string() << '\n';
  return kOk;
}

std::pair<std::string, std::vector<double>> parse_sweep(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--sweep: expected PARAM=v1,v2,...");
  std::vector<double> values;
  std::stringstream ss(spec.substr(eq + 1));
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--sweep: '" + item + "' is not a number");
    }
  }
  if (values.empty()) throw ConfigError("--sweep: no values given");
  return {spec.substr(0, eq), values};
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

int cmd_sweep(const CommonArgs& a, const std::string& spec, int jobs) {
  const ScenarioConfig base = load_config(a);
  const auto [param, values] = parse_sweep(spec);
  // An unknown parameter is a config error for the whole sweep; a bad value
  // only fails its own run.
  (void)with_parameter(base, param, values.front());

  std::vector<ScenarioConfig> configs;
  std::vector<std::string> pre_errors(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ScenarioConfig c = base;
    try {
      c = with_parameter(base, param, values[i]);
    } catch (const ConfigError& e) {
      pre_errors[i] = e.what();
    }
    c.name = base.name + "_" + std::to_string(i);
    configs.push_back(std::move(c));
  }

  BatchOptions opts;
  opts.jobs = jobs;
  opts.keep_results = true;
  auto outcomes = run_batch(configs, opts);

  const fs::path dir = a.output.empty() ? output_dir() / (base.name + "_sweep") : fs::path(a.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string());

  std::ofstream agg(dir / "aggregate.csv");
  if (!agg) throw IoError("cannot write " + (dir / "aggregate.csv").string());
  agg << "value,status,final_eta,final_W,min_sigma,csv,error\n";
  int failed = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    auto& o = outcomes[i];
    if (!pre_errors[i].empty()) {
      o.status = RunStatus::ConfigFailed;
      o.error = pre_errors[i];
    }
    std::string file;
    if (o.status == RunStatus::Ok) {
      file = configs[i].name + ".csv";
      write_result(dir / file, *o.result);
    } else {
      ++failed;
      std::cerr << "run " << i << " (" << param << " = " << values[i] << ") " << to_string(o.status) << ": "
                << o.error << '\n';
    }
    std::string err = o.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    const bool ok = o.status == RunStatus::Ok;
    agg << cell(values[i]) << ',' << (ok ? "ok" : "FAILED") << ','
        << (ok ? cell(o.summary.final_efficiency) : "") << ',' << (ok ? cell(o.summary.final_work) : "") << ','
        << (ok ? cell(o.summary.min_entropy_production) : "") << ',' << file << ',' << err << '\n';
  }
  std::cout << "sweep " << param << ": " << values.size() - failed << "/" << values.size() << " runs ok, "
            << (dir / "aggregate.csv").string() << '\n';
  return kOk;
}

int cmd_check(double dt, int jobs) {
  AcceptanceOptions opts;
  opts.dt = dt;
  opts.jobs = jobs;
  const auto results = run_acceptance(opts);
  std::cout << format_report(results);
  const bool ok = all_passed(results);
  std::cout << (ok ? "all criteria passed\n" : "acceptance FAILED\n");
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qpulse: pulse-driven open quantum systems"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "run one scenario and write its CSV");
  add_common(sim, sim_args);
  sim->add_option("--output", sim_args.output, "CSV path (default: $QPULSE_OUTPUT_DIR/<name>.csv)");

  CommonArgs sweep_args;
  std::string sweep_spec;
  int sweep_jobs = 0;
  auto* sweep = app.add_subcommand("sweep", "run one scenario per parameter value");
  add_common(sweep, sweep_args);
  sweep->add_option("--output", sweep_args.output, "output directory");
  sweep->add_option("--sweep", sweep_spec, "PARAM=v1,v2,... with PARAM a dotted config key")->required();
  sweep->add_option("--jobs", sweep_jobs, "concurrent runs (default: all cores)");

  double check_dt = 0.02;
  int check_jobs = 0;
  auto* check = app.add_subcommand("check", "run the acceptance suite");
  check->add_option("--dt", check_dt, "base step for the convergence checks");
  check->add_option("--jobs", check_jobs, "concurrent runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*sim) return cmd_simulate(sim_args);
    if (*sweep) return cmd_sweep(sweep_args, sweep_spec, sweep_jobs);
    return cmd_check(check_dt, check_jobs);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const IntegrationError& e) {
    std::cerr << "integration error: " << e.what() << '\n';
    return kIntegration;
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << '\n';
    return kIntegration;
  }
}
