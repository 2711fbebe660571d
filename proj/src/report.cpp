#include "vacemit/report.hpp"

#include <cmath>

#include "vacemit/csv.hpp"

namespace vacemit {

namespace {

void emit(const nlohmann::json& v, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(it.key()).dump() + ": ";
        emit(it.value(), out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        emit(v[i], out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_number(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

nlohmann::json matrix_json(const Matrix2& m) {
  return nlohmann::json::array({nlohmann::json::array({m[0][0], m[0][1]}),
                                nlohmann::json::array({m[1][0], m[1][1]})});
}

}  // namespace

std::string to_json_text(const nlohmann::json& value) {
  std::string out;
  emit(value, out, 0);
  out += '\n';
  return out;
}

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j;
  j["material"] = {{"name", c.material.name},
                   {"work_function_phi", c.material.work_function_phi},
                   {"fermi_level_mu", c.material.fermi_level_mu},
                   {"richardson_constant_A", c.material.richardson_constant_A}};
  j["geometry"] = {{"gap_d", c.geometry.gap_d},
                   {"num_emitters_N", c.geometry.num_emitters_N},
                   {"pitch", c.geometry.pitch},
                   {"emitting_area_per_tip", c.geometry.emitting_area_per_tip},
                   {"field_conversion_beta", c.geometry.field_conversion_beta},
                   {"breakdown_mode", std::string(to_string(c.breakdown_mode))},
                   {"breakdown_field_limit", c.geometry.breakdown_field_limit},
                   {"screening", std::string(to_string(c.geometry.screening.kind))},
                   {"screening_c", c.geometry.screening.coefficient}};
  j["environment"] = {{"temperature_T", c.environment.temperature_T},
                      {"pressure_p", c.environment.pressure_p},
                      {"gas_cross_section_sigma", c.environment.gas_cross_section_sigma},
                      {"surface_delta_phi", c.environment.surface_delta_phi},
                      {"noise_spike_rate", c.environment.noise_spike_rate},
                      {"noise_spike_amplitude", c.environment.noise_spike_amplitude},
                      {"rng_seed", c.environment.rng_seed},
                      {"ballistic_attenuation", c.environment.ballistic_attenuation}};
  j["fit"] = {{"current_floor", c.fit.current_floor},
              {"residual_space", std::string(to_string(c.fit.residual_space))},
              {"turn_on_threshold", c.fit.turn_on_threshold},
              {"max_iterations", c.fit.max_iterations},
              {"tolerance", c.fit.tolerance},
              {"refine", c.fit.refine},
              {"pin", std::string(to_string(c.fit.pin))}};
  j["sweep"] = {{"v_min", c.sweep.v_min}, {"v_max", c.sweep.v_max}, {"steps", c.sweep.steps}};
  j["monitor"] = {{"voltage", c.monitor.voltage},
                  {"p_min", c.monitor.p_min},
                  {"p_max", c.monitor.p_max},
                  {"points", c.monitor.points}};
  j["output"] = {{"path", c.output_path}};
  return j;
}

nlohmann::json fit_json(const FitResult& fit) {
  nlohmann::json j = {{"prefactor_C", fit.prefactor_C},
                      {"slope_B", fit.slope_B},
                      {"covariance", matrix_json(fit.covariance)},
                      {"covariance_determined", fit.covariance_determined},
                      {"r_squared", fit.r_squared},
                      {"residual_norm", fit.residual_norm},
                      {"n_points", fit.n_points},
                      {"iterations", fit.iterations}};
  j["extracted_beta"] = fit.extracted_beta ? nlohmann::json(*fit.extracted_beta) : nullptr;
  j["extracted_phi"] = fit.extracted_phi ? nlohmann::json(*fit.extracted_phi) : nullptr;
  return j;
}

nlohmann::json make_report(std::string_view command, const RunConfig& config,
                           nlohmann::json result, const std::vector<std::string>& warnings) {
  return {{"tool", "vacemit"},
          {"schema_version", report_schema_version},
          {"command", std::string(command)},
          {"config", config_json(config)},
          {"result", std::move(result)},
          {"warnings", warnings}};
}

std::string write_report(const RunConfig& config, const FitReport& report, ReportFormat format) {
  if (format == ReportFormat::csv) return write_fn_csv(report.transform);

  nlohmann::json result = {{"linear_fit", fit_json(report.linear)},
                           {"dropped_points", report.transform.dropped}};
  result["fit"] = fit_json(report.refined ? *report.refined : report.linear);
  result["refined"] = report.refined.has_value();
  return to_json_text(make_report("fit", config, std::move(result), report.warnings));
}

}  // namespace vacemit
