#include "vacemit/errors.hpp"

#include <cstdio>

namespace vacemit {

namespace {

std::string breakdown_message(double field, double limit) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "breakdown: local field %.6g V/m exceeds limit %.6g V/m", field,
                limit);
  return buf;
}

std::string located(const std::string& message, int line, int column) {
  std::string out = "line " + std::to_string(line);
  if (column > 0) out += ", column " + std::to_string(column);
  return out + ": " + message;
}

}  // namespace

BreakdownViolation::BreakdownViolation(double field, double limit)
    : ModelError(breakdown_message(field, limit)), field_(field), limit_(limit) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(located(message, line, column)), line_(line), column_(column) {}

}  // namespace vacemit
