#pragma once

#include <string>
#include <string_view>

#include "vacemit/extraction.hpp"
#include "vacemit/types.hpp"

namespace vacemit {

/// Which operating-point parameter the user pins when converting a
/// voltage-space fit into physical quantities.
enum class FitPin { none, work_function, beta };

struct FitOptions {
  double current_floor = 1e-12;  // A
  ResidualSpace residual_space = ResidualSpace::log_current;
  double turn_on_threshold = 1e-9;  // A
  int max_iterations = 200;
  double tolerance = 1e-10;
  bool refine = true;
  FitPin pin = FitPin::work_function;
};

struct SweepOptions {
  double v_min = 0.0;
  double v_max = 100.0;
  int steps = 101;
};

struct MonitorOptions {
  double voltage = 100.0;
  double p_min = 1e-6;  // Pa
  double p_max = 1e3;   // Pa
  int points = 10;
};

enum class BreakdownMode { vacuum, air };

/// Fully resolved run configuration.
struct RunConfig {
  Material material;
  DeviceGeometry geometry;
  EnvironmentState environment;
  BreakdownMode breakdown_mode = BreakdownMode::vacuum;
  FitOptions fit;
  SweepOptions sweep;
  MonitorOptions monitor;
  std::string output_path = "-";
};

/// Parse `section.key = value` lines; `#` starts a comment. Omitted keys keep
/// their defaults. Throws ParseError carrying the line and column.
RunConfig parse_config(std::string_view text);

/// Read a config file, or defaults when path is empty.
RunConfig load_config(const std::string& path);

std::string_view to_string(ResidualSpace space);
std::string_view to_string(FitPin pin);
std::string_view to_string(BreakdownMode mode);
std::string_view to_string(ScreeningKind kind);

}  // namespace vacemit
