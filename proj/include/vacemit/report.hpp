#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vacemit/config.hpp"
#include "vacemit/extraction.hpp"

namespace vacemit {

inline constexpr int report_schema_version = 1;

enum class ReportFormat { csv, json };

/// Serialise with sorted keys, two-space indent and every floating-point
/// number printed with 17 significant digits. Non-finite numbers become null.
std::string to_json_text(const nlohmann::json& value);

nlohmann::json config_json(const RunConfig& config);
nlohmann::json fit_json(const FitResult& fit);

/// Envelope shared by every JSON report: tool, schema version, command, the
/// resolved config, the command's result and any warnings.
nlohmann::json make_report(std::string_view command, const RunConfig& config,
                           nlohmann::json result, const std::vector<std::string>& warnings);

struct FitReport {
  FNTransform transform;
  FitResult linear;
  std::optional<FitResult> refined;
  std::vector<std::string> warnings;
};

/// json: full report envelope. csv: the F-N plot columns the fit used.
std::string write_report(const RunConfig& config, const FitReport& report, ReportFormat format);

}  // namespace vacemit
