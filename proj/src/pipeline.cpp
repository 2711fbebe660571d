#include "vacemit/pipeline.hpp"

#include <cmath>

#include "vacemit/csv.hpp"
#include "vacemit/environment.hpp"
#include "vacemit/errors.hpp"

namespace vacemit {

namespace {

void attach_pinned(const RunConfig& config, FitResult& fit) {
  switch (config.fit.pin) {
    case FitPin::none:
      return;
    case FitPin::work_function: {
      Material effective = config.material;
      effective.work_function_phi = effective_work_function(config.material, config.environment);
      fit.extracted_beta = extract_beta(fit, effective);
      return;
    }
    case FitPin::beta:
      fit.extracted_phi = extract_work_function(fit, config.geometry);
      return;
  }
}

}  // namespace

FitReport fit_curve(const RunConfig& config, const IVCurve& curve) {
  FitReport report;
  const IVCurve kept = apply_current_floor(curve, config.fit.current_floor);
  if (kept.size() < curve.size()) {
    report.warnings.push_back(std::to_string(curve.size() - kept.size()) +
                              " samples below the current floor " +
                              format_number(config.fit.current_floor) + " A excluded");
  }

  report.transform = fn_transform(kept);
  if (report.transform.dropped > 0) {
    report.warnings.push_back(std::to_string(report.transform.dropped) +
                              " samples with V <= 0 or I <= 0 dropped");
  }
  report.linear = fn_linear_fit(report.transform.points);
  if (!(report.linear.slope_B > 0.0)) {
    throw UnphysicalFit("fitted slope B = " + format_number(report.linear.slope_B) +
                        " V is not positive; data are not in the Fowler-Nordheim regime");
  }
  if (!report.linear.covariance_determined) {
    report.warnings.push_back("two-point fit: covariance undetermined");
  }

  if (config.fit.refine && report.transform.points.size() >= 3) {
    RefineOptions options;
    options.residual_space = config.fit.residual_space;
    options.max_iterations = config.fit.max_iterations;
    options.relative_tolerance = config.fit.tolerance;
    report.refined = nonlinear_refine(
        kept, {report.linear.prefactor_C, report.linear.slope_B}, options);
  }

  attach_pinned(config, report.linear);
  if (report.refined) attach_pinned(config, *report.refined);
  return report;
}

double measured_turn_on(const IVCurve& curve, double threshold_current) {
  if (!std::isfinite(threshold_current) || threshold_current <= 0.0) {
    throw InvalidInput("turn-on threshold must be > 0");
  }
  validate(curve);
  const auto& s = curve.samples;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].current < threshold_current) continue;
    if (i == 0 || !(s[i - 1].current > 0.0)) return s[i].voltage;
    const double lo = std::log(s[i - 1].current);
    const double hi = std::log(s[i].current);
    const double t = (std::log(threshold_current) - lo) / (hi - lo);
    return s[i - 1].voltage + t * (s[i].voltage - s[i - 1].voltage);
  }
  throw NeverTurnsOn("measured current never reaches " + format_number(threshold_current) +
                     " A");
}

}  // namespace vacemit
