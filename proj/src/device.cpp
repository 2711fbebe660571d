#include "vacemit/device.hpp"

#include <cmath>
#include <limits>

#include "vacemit/emission.hpp"
#include "vacemit/environment.hpp"
#include "vacemit/errors.hpp"

namespace vacemit {

double screening_factor(const DeviceGeometry& geometry) {
  validate(geometry);
  if (geometry.num_emitters_N == 1) return 1.0;
  switch (geometry.screening.kind) {
    case ScreeningKind::none:
      return 1.0;
    case ScreeningKind::exponential:
      // -expm1(-x) keeps s > 0 for tiny pitch/gap ratios.
      return -std::expm1(-geometry.screening.coefficient * geometry.pitch / geometry.gap_d);
  }
  return 1.0;
}

BreakdownReport breakdown_check(const DeviceGeometry& geometry, double voltage) {
  const LocalField f = local_field(geometry, voltage);
  const double limit = geometry.breakdown_field_limit;
  return BreakdownReport{f.field > limit, f.field, limit, f.field / limit};
}

double breakdown_voltage(const DeviceGeometry& geometry) {
  validate(geometry);
  const double beta = geometry.field_conversion_beta;
  const double limit = geometry.breakdown_field_limit;
  double v = limit / beta;
  while (std::isfinite(v) && beta * v > limit) v = std::nextafter(v, 0.0);
  return v;
}

double device_current(const DeviceGeometry& geometry, const Material& material,
                      const EnvironmentState& env, double voltage) {
  validate(env);
  const BreakdownReport bd = breakdown_check(geometry, voltage);
  if (bd.violation) throw BreakdownViolation(bd.field, bd.limit);
  if (voltage == 0.0) return 0.0;

  const FNCoefficients coeffs = fn_coefficients(effective_work_function(material, env));
  const double density = fn_current_density_simplified(coeffs, bd.field);
  const double attenuation =
      env.ballistic_attenuation ? ballistic_fraction(env, geometry.gap_d) : 1.0;
  return geometry.num_emitters_N * screening_factor(geometry) *
         geometry.emitting_area_per_tip * density * attenuation;
}

IVCurve iv_sweep(const DeviceGeometry& geometry, const Material& material,
                 const EnvironmentState& env, double v_min, double v_max, int steps) {
  if (!std::isfinite(v_min) || !std::isfinite(v_max) || v_min < 0.0 || v_min >= v_max) {
    throw InvalidInput("iv_sweep: requires 0 <= v_min < v_max");
  }
  if (steps < 2) throw InvalidInput("iv_sweep: steps must be >= 2");

  IVCurve curve;
  curve.samples.reserve(static_cast<std::size_t>(steps));
  const double span = v_max - v_min;
  for (int i = 0; i < steps; ++i) {
    const double v = (i == steps - 1) ? v_max : v_min + span * i / (steps - 1);
    curve.samples.push_back({v, device_current(geometry, material, env, v)});
  }
  return curve;
}

double turn_on_voltage(const DeviceGeometry& geometry, const Material& material,
                       const EnvironmentState& env, double threshold_current,
                       const TurnOnOptions& options) {
  if (!std::isfinite(threshold_current) || threshold_current <= 0.0) {
    throw InvalidInput("turn_on_voltage: threshold must be > 0");
  }
  if (!(options.tolerance > 0.0)) throw InvalidInput("turn_on_voltage: tolerance must be > 0");

  const double v_bd = breakdown_voltage(geometry);
  double hi = options.v_max ? std::min(*options.v_max, v_bd) : v_bd;
  if (!std::isfinite(hi) || hi <= 0.0) {
    throw InvalidInput("turn_on_voltage: search range needs a finite positive v_max");
  }
  if (device_current(geometry, material, env, hi) < threshold_current) {
    throw NeverTurnsOn("device never reaches the turn-on threshold below " +
                       std::to_string(hi) + " V");
  }

  double lo = 0.0;
  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (device_current(geometry, material, env, mid) >= threshold_current) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

DeviceGeometry calibrate_geometry(const DeviceGeometry& base, const Material& material,
                                  const EnvironmentState& env, double prefactor_C,
                                  double slope_B) {
  validate(base);
  validate(env);
  if (!std::isfinite(prefactor_C) || prefactor_C <= 0.0 || !std::isfinite(slope_B) ||
      slope_B <= 0.0) {
    throw UnphysicalFit("calibrate_geometry: C and B must be > 0");
  }
  const FNCoefficients coeffs = fn_coefficients(effective_work_function(material, env));

  DeviceGeometry out = base;
  out.field_conversion_beta = coeffs.b_fn / slope_B;
  const double attenuation =
      env.ballistic_attenuation ? ballistic_fraction(env, base.gap_d) : 1.0;
  const double beta = out.field_conversion_beta;
  out.emitting_area_per_tip = prefactor_C / (base.num_emitters_N * screening_factor(base) *
                                             coeffs.a_fn * beta * beta * attenuation);
  validate(out);
  return out;
}

}  // namespace vacemit
