// vacemit: simulate, fit and monitor lateral field-emission microdiodes.
//
// Exit codes: 0 success, 1 usage or input error, 2 model or fit error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vacemit/config.hpp"
#include "vacemit/csv.hpp"
#include "vacemit/device.hpp"
#include "vacemit/environment.hpp"
#include "vacemit/errors.hpp"
#include "vacemit/pipeline.hpp"
#include "vacemit/report.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_model = 2;

using namespace vacemit;

struct Options {
  std::string config_path;
  std::string output_path;
  std::string data_path;
  std::string format = "json";
  std::optional<double> v_min, v_max, voltage, current, threshold, p_min, p_max;
  std::optional<int> steps, points;
};

void write_output(const RunConfig& config, const Options& opts, const std::string& text) {
  const std::string& path = opts.output_path.empty() ? config.output_path : opts.output_path;
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file '" + path + "'");
  out << text;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

CsvParse load_data(const Options& opts) {
  CsvParse data = read_iv_csv_file(opts.data_path);
  print_warnings(data.warnings);
  return data;
}

int run_simulate(RunConfig config, const Options& opts) {
  if (opts.v_min) config.sweep.v_min = *opts.v_min;
  if (opts.v_max) config.sweep.v_max = *opts.v_max;
  if (opts.steps) config.sweep.steps = *opts.steps;
  print_warnings(environment_warnings(config.environment));
  const IVCurve clean = iv_sweep(config.geometry, config.material, config.environment,
                                 config.sweep.v_min, config.sweep.v_max, config.sweep.steps);
  write_output(config, opts, write_iv_csv(emission_noise(config.environment, clean)));
  return exit_ok;
}

int run_fit(const RunConfig& config, const Options& opts) {
  CsvParse data = load_data(opts);
  FitReport report = fit_curve(config, data.curve);
  report.warnings.insert(report.warnings.begin(), data.warnings.begin(), data.warnings.end());
  const ReportFormat format = opts.format == "csv" ? ReportFormat::csv : ReportFormat::json;
  if (format == ReportFormat::csv) print_warnings(report.warnings);
  write_output(config, opts, write_report(config, report, format));
  return exit_ok;
}

int run_fnplot(const RunConfig& config, const Options& opts) {
  const CsvParse data = load_data(opts);
  const FNTransform t = fn_transform(data.curve);
  if (t.dropped > 0) std::cerr << "warning: " << t.dropped << " samples with V <= 0 or I <= 0 dropped\n";
  write_output(config, opts, write_fn_csv(t));
  return exit_ok;
}

int run_turnon(const RunConfig& config, const Options& opts) {
  const double threshold = opts.threshold.value_or(config.fit.turn_on_threshold);
  std::vector<std::string> warnings;
  nlohmann::json result = {{"threshold_current", threshold}};
  if (!opts.data_path.empty()) {
    const CsvParse data = load_data(opts);
    warnings = data.warnings;
    result["source"] = "data";
    result["turn_on_voltage"] = measured_turn_on(data.curve, threshold);
  } else {
    TurnOnOptions turn_on;
    turn_on.v_max = opts.v_max;
    result["source"] = "model";
    result["turn_on_voltage"] = turn_on_voltage(config.geometry, config.material,
                                                config.environment, threshold, turn_on);
    result["tolerance"] = turn_on.tolerance;
  }
  write_output(config, opts, to_json_text(make_report("turnon", config, result, warnings)));
  return exit_ok;
}

int run_monitor(RunConfig config, const Options& opts) {
  if (opts.voltage) config.monitor.voltage = *opts.voltage;
  if (opts.p_min) config.monitor.p_min = *opts.p_min;
  if (opts.p_max) config.monitor.p_max = *opts.p_max;
  if (opts.points) config.monitor.points = *opts.points;
  const auto& m = config.monitor;
  if (!(m.p_min > 0.0 && m.p_min < m.p_max) || m.points < 2) {
    throw InvalidInput("monitor: need 0 < p_min < p_max and points >= 2");
  }

  EnvironmentState env = config.environment;
  env.ballistic_attenuation = true;

  if (opts.current) {
    const double p = pressure_from_current(config.geometry, config.material, env, *opts.current,
                                           m.voltage);
    env.pressure_p = p;
    nlohmann::json result = {{"voltage", m.voltage},
                             {"measured_current", *opts.current},
                             {"pressure_Pa", p},
                             {"mean_free_path", mean_free_path(env)},
                             {"ballistic_fraction", ballistic_fraction(env, config.geometry.gap_d)}};
    write_output(config, opts,
                 to_json_text(make_report("monitor", config, result, environment_warnings(env))));
    return exit_ok;
  }

  std::vector<std::pair<double, double>> rows;
  const double log_lo = std::log10(m.p_min);
  const double log_hi = std::log10(m.p_max);
  for (int i = 0; i < m.points; ++i) {
    env.pressure_p = i == m.points - 1 ? m.p_max
                                       : std::pow(10.0, log_lo + (log_hi - log_lo) * i / (m.points - 1));
    rows.emplace_back(env.pressure_p,
                      device_current(config.geometry, config.material, env, m.voltage));
  }
  if (m.p_max > ion_bombardment_pressure) {
    env.pressure_p = m.p_max;
    print_warnings(environment_warnings(env));
  }
  write_output(config, opts, write_table_csv("pressure_Pa,current_A", rows));
  return exit_ok;
}

int run_check(const RunConfig& config, const Options& opts) {
  const double v = opts.voltage.value_or(config.sweep.v_max);
  const BreakdownReport r = breakdown_check(config.geometry, v);
  nlohmann::json result = {{"voltage", v},
                           {"violation", r.violation},
                           {"field", r.field},
                           {"limit", r.limit},
                           {"margin_ratio", r.margin_ratio},
                           {"breakdown_voltage", breakdown_voltage(config.geometry)},
                           {"enhancement", config.geometry.field_conversion_beta * config.geometry.gap_d}};
  std::vector<std::string> warnings;
  if (r.violation) warnings.emplace_back("design rule violated: local field exceeds breakdown limit");
  write_output(config, opts, to_json_text(make_report("check", config, result, warnings)));
  return r.violation ? exit_model : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Field-emission microdiode simulation, Fowler-Nordheim extraction and vacuum monitoring"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", opts.config_path, "Config file (section.key = value)")
        ->check(CLI::ExistingFile);
    sub->add_option("-o,--output", opts.output_path, "Output file, '-' for stdout");
  };

  auto* simulate = app.add_subcommand("simulate", "Model I-V sweep as CSV");
  add_common(simulate);
  simulate->add_option("--v-min", opts.v_min, "Sweep start (V)");
  simulate->add_option("--v-max", opts.v_max, "Sweep end (V)");
  simulate->add_option("--steps", opts.steps, "Number of sweep points");

  auto* fit = app.add_subcommand("fit", "Fit I = C V^2 exp(-B/V) to measured data");
  add_common(fit);
  fit->add_option("-d,--data", opts.data_path, "Measured voltage_V,current_A CSV")
      ->required()
      ->check(CLI::ExistingFile);
  fit->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  auto* fnplot = app.add_subcommand("fnplot", "Fowler-Nordheim plot coordinates as CSV");
  add_common(fnplot);
  fnplot->add_option("-d,--data", opts.data_path, "Measured voltage_V,current_A CSV")
      ->required()
      ->check(CLI::ExistingFile);

  auto* turnon = app.add_subcommand("turnon", "Turn-on voltage from data or from the model");
  add_common(turnon);
  turnon->add_option("-d,--data", opts.data_path, "Measured CSV; model is used when omitted")
      ->check(CLI::ExistingFile);
  turnon->add_option("--threshold", opts.threshold, "Turn-on current threshold (A)");
  turnon->add_option("--v-max", opts.v_max, "Upper end of the model search (V)");

  auto* monitor = app.add_subcommand("monitor", "Pressure/current table or inferred pressure");
  add_common(monitor);
  monitor->add_option("--voltage", opts.voltage, "Bias voltage (V)");
  monitor->add_option("--current", opts.current, "Measured current (A); infers pressure");
  monitor->add_option("--p-min", opts.p_min, "Table start pressure (Pa)");
  monitor->add_option("--p-max", opts.p_max, "Table end pressure (Pa)");
  monitor->add_option("--points", opts.points, "Table rows");

  auto* check = app.add_subcommand("check", "Breakdown design-rule check");
  add_common(check);
  check->add_option("--voltage", opts.voltage, "Bias voltage (V), default sweep.v_max");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    const RunConfig config = load_config(opts.config_path);
    if (simulate->parsed()) return run_simulate(config, opts);
    if (fit->parsed()) return run_fit(config, opts);
    if (fnplot->parsed()) return run_fnplot(config, opts);
    if (turnon->parsed()) return run_turnon(config, opts);
    if (monitor->parsed()) return run_monitor(config, opts);
    if (check->parsed()) return run_check(config, opts);
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_model;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
