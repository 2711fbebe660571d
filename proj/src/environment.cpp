#include "vacemit/environment.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "vacemit/constants.hpp"
#include "vacemit/device.hpp"
#include "vacemit/errors.hpp"

namespace vacemit {

double effective_work_function(const Material& material, const EnvironmentState& env) {
  validate(material);
  const double phi = material.work_function_phi + env.surface_delta_phi;
  if (!std::isfinite(phi) || phi <= 0.0) {
    throw InvalidInput("effective work function phi + delta_phi must be > 0");
  }
  return phi;
}

double mean_free_path(const EnvironmentState& env) {
  validate(env);
  if (env.pressure_p == 0.0) return std::numeric_limits<double>::infinity();
  return constants::boltzmann_J * env.temperature_T /
         (env.pressure_p * env.gas_cross_section_sigma);
}

double ballistic_fraction(const EnvironmentState& env, double gap) {
  if (!std::isfinite(gap) || gap <= 0.0) throw InvalidInput("ballistic_fraction: gap must be > 0");
  const double lambda = mean_free_path(env);
  if (std::isinf(lambda)) return 1.0;
  return std::exp(-gap / lambda);
}

std::vector<std::string> environment_warnings(const EnvironmentState& env) {
  std::vector<std::string> out;
  if (env.pressure_p > ion_bombardment_pressure) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "pressure %.6g Pa exceeds %.6g Pa: ion bombardment of the emitters expected",
                  env.pressure_p, ion_bombardment_pressure);
    out.emplace_back(buf);
  }
  return out;
}

double pressure_from_current(const DeviceGeometry& geometry, const Material& material,
                             const EnvironmentState& env_template, double measured_current,
                             double voltage, const PressureSearch& search) {
  if (!std::isfinite(measured_current) || measured_current <= 0.0) {
    throw InvalidInput("pressure_from_current: measured current must be > 0");
  }
  if (!std::isfinite(voltage) || voltage <= 0.0) {
    throw InvalidInput("pressure_from_current: voltage must be > 0");
  }
  if (!(search.lower > 0.0 && search.upper > search.lower && search.relative_tolerance > 0.0)) {
    throw InvalidInput("pressure_from_current: bad search bracket");
  }

  EnvironmentState env = env_template;
  env.ballistic_attenuation = true;
  auto current_at = [&](double p) {
    env.pressure_p = p;
    return device_current(geometry, material, env, voltage);
  };

  const double vacuum = current_at(0.0);
  if (measured_current > vacuum * (1.0 + search.vacuum_tolerance)) {
    throw InconsistentMeasurement("measured current exceeds the vacuum current of the model");
  }
  if (measured_current >= vacuum * (1.0 - search.vacuum_tolerance)) return 0.0;
  if (measured_current < current_at(search.upper)) {
    throw InconsistentMeasurement("measured current is below the model current at " +
                                  std::to_string(search.upper) + " Pa");
  }

  double lo = search.lower;
  double hi = search.upper;
  while (hi / lo > 1.0 + search.relative_tolerance) {
    const double mid = std::sqrt(lo * hi);
    if (current_at(mid) >= measured_current) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

IVCurve emission_noise(const EnvironmentState& env, const IVCurve& base) {
  validate(env);
  validate(base);
  const double rate = std::min(env.noise_spike_rate, 1.0);
  if (rate == 0.0) return base;

  // Uniforms are built from the raw 64-bit stream so the spike pattern does
  // not depend on the standard library's distribution implementations.
  std::mt19937_64 rng(env.rng_seed);
  IVCurve out = base;
  std::size_t spikes = 0;
  for (auto& s : out.samples) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < rate) {
      s.current *= 1.0 + env.noise_spike_amplitude;
      ++spikes;
    }
  }
  out.metadata["noise_spikes"] = std::to_string(spikes);
  return out;
}

}  // namespace vacemit
