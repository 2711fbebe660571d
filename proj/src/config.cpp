#include "vacemit/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "vacemit/errors.hpp"

namespace vacemit {

std::string_view to_string(ResidualSpace space) {
  return space == ResidualSpace::log_current ? "log" : "linear";
}

std::string_view to_string(FitPin pin) {
  switch (pin) {
    case FitPin::none: return "none";
    case FitPin::work_function: return "work_function";
    case FitPin::beta: return "beta";
  }
  return "none";
}

std::string_view to_string(BreakdownMode mode) {
  return mode == BreakdownMode::vacuum ? "vacuum" : "air";
}

std::string_view to_string(ScreeningKind kind) {
  return kind == ScreeningKind::none ? "none" : "exponential";
}

namespace {

struct Entry {
  std::string key;
  std::string value;
  int line;
  int value_column;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class ValueReader {
 public:
  explicit ValueReader(const Entry& e) : e_(e) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(e_.key + ": " + message, e_.line, e_.value_column);
  }

  double number() const {
    double v = 0.0;
    const char* begin = e_.value.data();
    const char* end = begin + e_.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
      fail("expected a finite number, got '" + e_.value + "'");
    }
    return v;
  }

  double positive() const {
    const double v = number();
    if (!(v > 0.0)) fail("value out of range, must be > 0");
    return v;
  }

  double non_negative() const {
    const double v = number();
    if (v < 0.0) fail("value out of range, must be >= 0");
    return v;
  }

  long long integer() const {
    long long v = 0;
    const char* begin = e_.value.data();
    const char* end = begin + e_.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) fail("expected an integer, got '" + e_.value + "'");
    return v;
  }

  bool boolean() const {
    if (e_.value == "true" || e_.value == "on" || e_.value == "1") return true;
    if (e_.value == "false" || e_.value == "off" || e_.value == "0") return false;
    fail("expected true/false, got '" + e_.value + "'");
  }

  template <typename T>
  T choice(const std::map<std::string, T>& options) const {
    const auto it = options.find(e_.value);
    if (it == options.end()) {
      std::string names;
      for (const auto& [name, _] : options) names += (names.empty() ? "" : "|") + name;
      fail("expected one of " + names + ", got '" + e_.value + "'");
    }
    return it->second;
  }

  const std::string& text() const { return e_.value; }

 private:
  const Entry& e_;
};

using Setter = std::function<void(RunConfig&, const ValueReader&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"material.preset",
       [](RunConfig& c, const ValueReader& r) {
         c.material = r.choice<Material>({{"aluminum", aluminum()}, {"tungsten", tungsten()}});
       }},
      {"material.name", [](RunConfig& c, const ValueReader& r) { c.material.name = r.text(); }},
      {"material.work_function_phi",
       [](RunConfig& c, const ValueReader& r) { c.material.work_function_phi = r.positive(); }},
      {"material.fermi_level_mu",
       [](RunConfig& c, const ValueReader& r) { c.material.fermi_level_mu = r.positive(); }},
      {"material.richardson_constant_A",
       [](RunConfig& c, const ValueReader& r) {
         c.material.richardson_constant_A = r.positive();
       }},

      {"geometry.gap_d", [](RunConfig& c, const ValueReader& r) { c.geometry.gap_d = r.positive(); }},
      {"geometry.num_emitters_N",
       [](RunConfig& c, const ValueReader& r) {
         const long long n = r.integer();
         if (n < 1 || n > 1000000000) r.fail("value out of range, must be >= 1");
         c.geometry.num_emitters_N = static_cast<int>(n);
       }},
      {"geometry.pitch", [](RunConfig& c, const ValueReader& r) { c.geometry.pitch = r.positive(); }},
      {"geometry.emitting_area_per_tip",
       [](RunConfig& c, const ValueReader& r) {
         c.geometry.emitting_area_per_tip = r.positive();
       }},
      {"geometry.field_conversion_beta",
       [](RunConfig& c, const ValueReader& r) {
         c.geometry.field_conversion_beta = r.positive();
       }},
      {"geometry.breakdown_mode",
       [](RunConfig& c, const ValueReader& r) {
         c.breakdown_mode = r.choice<BreakdownMode>(
             {{"vacuum", BreakdownMode::vacuum}, {"air", BreakdownMode::air}});
         c.geometry.breakdown_field_limit = c.breakdown_mode == BreakdownMode::vacuum
                                                ? vacuum_breakdown_field
                                                : air_breakdown_field;
       }},
      {"geometry.breakdown_field_limit",
       [](RunConfig& c, const ValueReader& r) {
         c.geometry.breakdown_field_limit = r.positive();
       }},
      {"geometry.screening",
       [](RunConfig& c, const ValueReader& r) {
         c.geometry.screening.kind = r.choice<ScreeningKind>(
             {{"none", ScreeningKind::none}, {"exponential", ScreeningKind::exponential}});
       }},
      {"geometry.screening_c",
       [](RunConfig& c, const ValueReader& r) {
         c.geometry.screening.coefficient = r.positive();
       }},

      {"environment.temperature_T",
       [](RunConfig& c, const ValueReader& r) { c.environment.temperature_T = r.positive(); }},
      {"environment.pressure_p",
       [](RunConfig& c, const ValueReader& r) { c.environment.pressure_p = r.non_negative(); }},
      {"environment.gas_cross_section_sigma",
       [](RunConfig& c, const ValueReader& r) {
         c.environment.gas_cross_section_sigma = r.positive();
       }},
      {"environment.surface_delta_phi",
       [](RunConfig& c, const ValueReader& r) { c.environment.surface_delta_phi = r.number(); }},
      {"environment.noise_spike_rate",
       [](RunConfig& c, const ValueReader& r) {
         const double v = r.non_negative();
         if (v > 1.0) r.fail("value out of range, must be <= 1");
         c.environment.noise_spike_rate = v;
       }},
      {"environment.noise_spike_amplitude",
       [](RunConfig& c, const ValueReader& r) {
         c.environment.noise_spike_amplitude = r.non_negative();
       }},
      {"environment.rng_seed",
       [](RunConfig& c, const ValueReader& r) {
         const long long v = r.integer();
         if (v < 0) r.fail("value out of range, must be >= 0");
         c.environment.rng_seed = static_cast<std::uint64_t>(v);
       }},
      {"environment.ballistic_attenuation",
       [](RunConfig& c, const ValueReader& r) {
         c.environment.ballistic_attenuation = r.boolean();
       }},

      {"fit.current_floor",
       [](RunConfig& c, const ValueReader& r) { c.fit.current_floor = r.non_negative(); }},
      {"fit.residual_space",
       [](RunConfig& c, const ValueReader& r) {
         c.fit.residual_space = r.choice<ResidualSpace>(
             {{"log", ResidualSpace::log_current}, {"linear", ResidualSpace::current}});
       }},
      {"fit.turn_on_threshold",
       [](RunConfig& c, const ValueReader& r) { c.fit.turn_on_threshold = r.positive(); }},
      {"fit.max_iterations",
       [](RunConfig& c, const ValueReader& r) {
         const long long v = r.integer();
         if (v < 1 || v > 1000000) r.fail("value out of range, must be in [1, 1e6]");
         c.fit.max_iterations = static_cast<int>(v);
       }},
      {"fit.tolerance", [](RunConfig& c, const ValueReader& r) { c.fit.tolerance = r.positive(); }},
      {"fit.refine", [](RunConfig& c, const ValueReader& r) { c.fit.refine = r.boolean(); }},
      {"fit.pin",
       [](RunConfig& c, const ValueReader& r) {
         c.fit.pin = r.choice<FitPin>({{"none", FitPin::none},
                                       {"work_function", FitPin::work_function},
                                       {"beta", FitPin::beta}});
       }},

      {"sweep.v_min", [](RunConfig& c, const ValueReader& r) { c.sweep.v_min = r.non_negative(); }},
      {"sweep.v_max", [](RunConfig& c, const ValueReader& r) { c.sweep.v_max = r.positive(); }},
      {"sweep.steps",
       [](RunConfig& c, const ValueReader& r) {
         const long long v = r.integer();
         if (v < 2 || v > 10000000) r.fail("value out of range, must be in [2, 1e7]");
         c.sweep.steps = static_cast<int>(v);
       }},

      {"monitor.voltage", [](RunConfig& c, const ValueReader& r) { c.monitor.voltage = r.positive(); }},
      {"monitor.p_min", [](RunConfig& c, const ValueReader& r) { c.monitor.p_min = r.positive(); }},
      {"monitor.p_max", [](RunConfig& c, const ValueReader& r) { c.monitor.p_max = r.positive(); }},
      {"monitor.points",
       [](RunConfig& c, const ValueReader& r) {
         const long long v = r.integer();
         if (v < 2 || v > 10000000) r.fail("value out of range, must be in [2, 1e7]");
         c.monitor.points = static_cast<int>(v);
       }},

      {"output.path", [](RunConfig& c, const ValueReader& r) { c.output_path = r.text(); }},
  };
  return table;
}

// Keys applied before all others so that explicit values override them.
int priority(const std::string& key) {
  if (key == "material.preset") return 0;
  if (key == "geometry.breakdown_mode") return 1;
  return 2;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  std::vector<Entry> entries;
  std::map<std::string, int> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;

    const auto eq = line.find('=');
    const int key_column = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (eq == std::string_view::npos) {
      throw ParseError("malformed line, expected 'section.key = value'", line_no, key_column);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value_part = line.substr(eq + 1);
    const std::string_view value = trim(value_part);
    const int value_column =
        value.empty() ? static_cast<int>(eq) + 2
                      : static_cast<int>(value.data() - raw.data()) + 1;

    if (key.empty() || key.find('.') == std::string::npos) {
      throw ParseError("malformed key '" + key + "', expected 'section.key'", line_no, key_column);
    }
    if (!setters().contains(key)) {
      throw ParseError("unknown key '" + key + "'", line_no, key_column);
    }
    if (value.empty()) throw ParseError(key + ": missing value", line_no, value_column);
    if (const auto it = seen.find(key); it != seen.end()) {
      throw ParseError("duplicate key '" + key + "' (first set on line " +
                           std::to_string(it->second) + ")",
                       line_no, key_column);
    }
    seen[key] = line_no;
    entries.push_back({key, std::string(value), line_no, value_column});
  }

  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return priority(a.key) < priority(b.key);
  });

  RunConfig config;
  for (const auto& e : entries) setters().at(e.key)(config, ValueReader(e));

  auto line_of = [&](const char* key) {
    const auto it = seen.find(key);
    return it == seen.end() ? 0 : it->second;
  };
  if (config.sweep.v_min >= config.sweep.v_max) {
    throw ParseError("sweep.v_min must be < sweep.v_max",
                     std::max(line_of("sweep.v_min"), line_of("sweep.v_max")));
  }
  if (config.monitor.p_min >= config.monitor.p_max) {
    throw ParseError("monitor.p_min must be < monitor.p_max",
                     std::max(line_of("monitor.p_min"), line_of("monitor.p_max")));
  }
  if (config.material.work_function_phi + config.environment.surface_delta_phi <= 0.0) {
    throw ParseError("material.work_function_phi + environment.surface_delta_phi must be > 0",
                     std::max(line_of("material.work_function_phi"),
                              line_of("environment.surface_delta_phi")));
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  if (path.empty()) return RunConfig{};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace vacemit
