#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vacemit/extraction.hpp"
#include "vacemit/types.hpp"

namespace vacemit {

inline constexpr std::string_view iv_csv_header = "voltage_V,current_A";
inline constexpr std::string_view fn_csv_header = "inv_voltage_per_V,ln_current_over_voltage_sq";

struct CsvParse {
  IVCurve curve;
  std::vector<std::string> warnings;
};

/// Read `voltage_V,current_A` data. Rows are sorted by voltage, duplicate
/// voltages are averaged and negative currents clamped to 0, each with a
/// warning. Throws ParseError with the offending line number.
CsvParse parse_iv_csv(std::istream& in);
CsvParse parse_iv_csv(std::string_view text);
CsvParse read_iv_csv_file(const std::string& path);

/// All numbers use 17 significant digits so a parse of the output is exact.
std::string format_number(double value);

std::string write_iv_csv(const IVCurve& curve);
std::string write_fn_csv(const FNTransform& transform);
std::string write_table_csv(std::string_view header,
                            const std::vector<std::pair<double, double>>& rows);

}  // namespace vacemit
