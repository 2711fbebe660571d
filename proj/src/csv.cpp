#include "vacemit/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vacemit/errors.hpp"

namespace vacemit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_field(std::string_view raw, std::string_view line, int line_no) {
  const std::string_view field = trim(raw);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  const int column = static_cast<int>(raw.data() - line.data()) + 1;
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("non-numeric field '" + std::string(field) + "'", line_no, column);
  }
  if (!std::isfinite(v)) throw ParseError("non-finite value", line_no, column);
  return v;
}

}  // namespace

CsvParse parse_iv_csv(std::istream& in) {
  CsvParse out;
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty input, missing header", 1);
  ++line_no;
  std::string_view header = line;
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  if (trim(header) != iv_csv_header) {
    throw ParseError("expected header '" + std::string(iv_csv_header) + "', got '" +
                         std::string(trim(header)) + "'",
                     1);
  }

  std::vector<IVSample> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = line;
    if (trim(text).empty()) continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected exactly 2 fields", line_no);
    }
    const double v = parse_field(text.substr(0, comma), text, line_no);
    double i = parse_field(text.substr(comma + 1), text, line_no);
    if (i < 0.0) {
      out.warnings.push_back("line " + std::to_string(line_no) + ": negative current " +
                             format_number(i) + " clamped to 0");
      i = 0.0;
    }
    rows.push_back({v, i});
  }
  if (rows.empty()) throw ParseError("empty body, no samples after header", line_no + 1);

  std::stable_sort(rows.begin(), rows.end(),
                   [](const IVSample& a, const IVSample& b) { return a.voltage < b.voltage; });

  for (std::size_t k = 0; k < rows.size();) {
    std::size_t end = k + 1;
    double sum = rows[k].current;
    while (end < rows.size() && rows[end].voltage == rows[k].voltage) sum += rows[end++].current;
    const std::size_t count = end - k;
    if (count > 1) {
      out.warnings.push_back("voltage " + format_number(rows[k].voltage) + " appears " +
                             std::to_string(count) + " times, currents averaged");
    }
    out.curve.samples.push_back({rows[k].voltage, sum / static_cast<double>(count)});
    k = end;
  }
  return out;
}

CsvParse parse_iv_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_iv_csv(in);
}

CsvParse read_iv_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open data file '" + path + "'");
  return parse_iv_csv(in);
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string write_iv_csv(const IVCurve& curve) {
  std::string out(iv_csv_header);
  out += '\n';
  for (const auto& s : curve.samples) {
    out += format_number(s.voltage) + ',' + format_number(s.current) + '\n';
  }
  return out;
}

std::string write_fn_csv(const FNTransform& transform) {
  std::string out(fn_csv_header);
  out += '\n';
  for (const auto& p : transform.points) out += format_number(p.x) + ',' + format_number(p.y) + '\n';
  return out;
}

std::string write_table_csv(std::string_view header,
                            const std::vector<std::pair<double, double>>& rows) {
  std::string out(header);
  out += '\n';
  for (const auto& [a, b] : rows) out += format_number(a) + ',' + format_number(b) + '\n';
  return out;
}

}  // namespace vacemit
