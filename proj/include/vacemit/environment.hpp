#pragma once

#include <string>
#include <vector>

#include "vacemit/types.hpp"

namespace vacemit {

/// Pressure above which residual-gas ions bombard the emitters (1e-4 mbar).
inline constexpr double ion_bombardment_pressure = 1e-2;  // Pa

/// phi + delta_phi. Throws InvalidInput when the result is not positive.
double effective_work_function(const Material& material, const EnvironmentState& env);

/// Kinetic-theory mean free path kT / (p sigma) in m; +infinity at p = 0.
double mean_free_path(const EnvironmentState& env);

/// Probability exp(-gap / lambda) of crossing the gap without a collision.
double ballistic_fraction(const EnvironmentState& env, double gap);

/// Warnings raised by the environment alone (ion bombardment).
std::vector<std::string> environment_warnings(const EnvironmentState& env);

struct PressureSearch {
  double lower = 1e-15;  // Pa
  double upper = 1e9;    // Pa
  double relative_tolerance = 1e-3;
  // Relative distance from the vacuum current below which p = 0 is reported.
  double vacuum_tolerance = 1e-13;
};

/// Invert the device current for pressure by bisection over log-pressure.
/// env_template supplies everything except the pressure; attenuation is
/// forced on. Returns 0 when the measurement equals the vacuum current.
double pressure_from_current(const DeviceGeometry& geometry, const Material& material,
                             const EnvironmentState& env_template, double measured_current,
                             double voltage, const PressureSearch& search = {});

/// Adds one-sided multiplicative current spikes. Each sample independently
/// becomes I (1 + amplitude) with probability noise_spike_rate (clamped to
/// [0, 1]). Deterministic for a given rng_seed.
IVCurve emission_noise(const EnvironmentState& env, const IVCurve& base);

}  // namespace vacemit
