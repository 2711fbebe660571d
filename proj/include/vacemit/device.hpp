#pragma once

#include <optional>

#include "vacemit/types.hpp"

namespace vacemit {

/// Fraction of the isolated-emitter field that survives neighbour screening.
/// In (0, 1]; exactly 1 for a single emitter or when screening is disabled.
double screening_factor(const DeviceGeometry& geometry);

/// Total array current in A:
///   N * s * area * J(phi_eff, beta V) * ballistic_fraction
/// where the ballistic term is applied only when env.ballistic_attenuation is
/// set. Throws BreakdownViolation when beta V exceeds the breakdown limit.
double device_current(const DeviceGeometry& geometry, const Material& material,
                      const EnvironmentState& env, double voltage);

/// Evenly spaced sweep, both endpoints included.
IVCurve iv_sweep(const DeviceGeometry& geometry, const Material& material,
                 const EnvironmentState& env, double v_min, double v_max, int steps);

inline constexpr double default_turn_on_threshold = 1e-9;  // A

struct TurnOnOptions {
  double tolerance = 0.01;  // V
  // Upper end of the search. Defaults to the breakdown voltage.
  std::optional<double> v_max;
};

/// Smallest V with device_current(V) >= threshold, to within tolerance (the
/// returned voltage always satisfies the threshold).
double turn_on_voltage(const DeviceGeometry& geometry, const Material& material,
                       const EnvironmentState& env, double threshold_current,
                       const TurnOnOptions& options = {});

struct BreakdownReport {
  bool violation;
  double field;         // V/m
  double limit;         // V/m
  double margin_ratio;  // field / limit
};

/// Violation iff beta V > limit; exactly at the limit passes.
BreakdownReport breakdown_check(const DeviceGeometry& geometry, double voltage);

/// Largest voltage that passes breakdown_check.
double breakdown_voltage(const DeviceGeometry& geometry);

/// Return a copy of base whose beta and emitting area reproduce the
/// voltage-space law I = C V^2 exp(-B/V) for the given material and
/// environment (at the environment's current screening and attenuation).
DeviceGeometry calibrate_geometry(const DeviceGeometry& base, const Material& material,
                                  const EnvironmentState& env, double prefactor_C,
                                  double slope_B);

}  // namespace vacemit
