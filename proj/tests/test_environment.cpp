#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "vacemit/device.hpp"
#include "vacemit/environment.hpp"
#include "vacemit/errors.hpp"

using namespace vacemit;

namespace {

DeviceGeometry test_geometry() {
  DeviceGeometry g;
  g.breakdown_field_limit = 1e12;
  return g;
}

EnvironmentState vacuum_env() {
  EnvironmentState env;
  env.pressure_p = 0.0;
  env.ballistic_attenuation = true;
  return env;
}

IVCurve ramp(std::size_t n) {
  IVCurve c;
  for (std::size_t i = 0; i < n; ++i) {
    c.samples.push_back({static_cast<double>(i + 1), 1e-9 * static_cast<double>(i + 1)});
  }
  return c;
}

}  // namespace

TEST(WorkFunction, ShiftIsAdditive) {
  EnvironmentState env;
  EXPECT_EQ(effective_work_function(aluminum(), env), 4.28);
  env.surface_delta_phi = 0.5;
  EXPECT_NEAR(effective_work_function(aluminum(), env), 4.78, 1e-15);
  env.surface_delta_phi = -4.28;
  EXPECT_THROW(effective_work_function(aluminum(), env), InvalidInput);
}

TEST(WorkFunction, PositiveShiftLowersCurrentAndRaisesTurnOn) {
  EnvironmentState clean = vacuum_env();
  EnvironmentState oxidised = clean;
  oxidised.surface_delta_phi = 0.3;
  const DeviceGeometry g = test_geometry();
  for (double v = 10.0; v <= 200.0; v += 10.0) {
    EXPECT_LT(device_current(g, aluminum(), oxidised, v), device_current(g, aluminum(), clean, v));
  }
  EXPECT_GT(turn_on_voltage(g, aluminum(), oxidised, 1e-9),
            turn_on_voltage(g, aluminum(), clean, 1e-9));
}

TEST(MeanFreePath, Examples) {
  EnvironmentState env;
  env.pressure_p = 0.0;
  EXPECT_TRUE(std::isinf(mean_free_path(env)));

  env.temperature_T = 300.0;
  env.pressure_p = 100.0;
  env.gas_cross_section_sigma = 1e-19;
  // Oracle: 1.380649e-23 * 300 / (100 * 1e-19).
  EXPECT_NEAR(mean_free_path(env), 4.141947e-4, 1e-12);
  const double lambda = mean_free_path(env);
  env.pressure_p = 50.0;
  EXPECT_NEAR(mean_free_path(env) / lambda, 2.0, 1e-14);
}

TEST(BallisticFraction, Examples) {
  EnvironmentState env;
  env.pressure_p = 0.0;
  EXPECT_EQ(ballistic_fraction(env, 2e-6), 1.0);
  env.pressure_p = 100.0;
  EXPECT_NEAR(ballistic_fraction(env, mean_free_path(env)), std::exp(-1.0), 1e-15);
  EXPECT_THROW(ballistic_fraction(env, 0.0), InvalidInput);
}

TEST(BallisticFraction, StrictlyDecreasingInPressure) {
  EnvironmentState env;
  double previous = 1.0;
  for (double p = 1e-6; p < 1e6; p *= 3.0) {
    env.pressure_p = p;
    const double f = ballistic_fraction(env, 2e-6);
    EXPECT_GT(f, 0.0);
    EXPECT_LT(f, 1.0);
    EXPECT_LT(f, previous);
    previous = f;
  }
}

TEST(Warnings, IonBombardmentAbove1e2Pa) {
  EnvironmentState env;
  env.pressure_p = 1e-2;
  EXPECT_TRUE(environment_warnings(env).empty());
  env.pressure_p = 2e-2;
  EXPECT_EQ(environment_warnings(env).size(), 1u);
}

TEST(PressureInversion, VacuumCurrentGivesZero) {
  const DeviceGeometry g = test_geometry();
  const double i_vac = device_current(g, aluminum(), vacuum_env(), 60.0);
  EXPECT_EQ(pressure_from_current(g, aluminum(), vacuum_env(), i_vac, 60.0), 0.0);
}

TEST(PressureInversion, RoundTripOverLogGrid) {
  const DeviceGeometry g = test_geometry();
  for (double log_p = -6.0; log_p <= 3.0; log_p += 0.25) {
    const double p = std::pow(10.0, log_p);
    EnvironmentState env = vacuum_env();
    env.pressure_p = p;
    const double measured = device_current(g, aluminum(), env, 60.0);
    const double inferred = pressure_from_current(g, aluminum(), vacuum_env(), measured, 60.0);
    EXPECT_LT(std::abs(inferred - p) / p, 0.01) << "p=" << p;
  }
}

TEST(PressureInversion, ForcesAttenuationOn) {
  const DeviceGeometry g = test_geometry();
  EnvironmentState no_attenuation = vacuum_env();
  no_attenuation.ballistic_attenuation = false;
  EnvironmentState at_p = vacuum_env();
  at_p.pressure_p = 10.0;
  const double measured = device_current(g, aluminum(), at_p, 60.0);
  EXPECT_NEAR(pressure_from_current(g, aluminum(), no_attenuation, measured, 60.0), 10.0, 0.1);
}

TEST(PressureInversion, Errors) {
  const DeviceGeometry g = test_geometry();
  const double i_vac = device_current(g, aluminum(), vacuum_env(), 60.0);
  EXPECT_THROW(pressure_from_current(g, aluminum(), vacuum_env(), 2.0 * i_vac, 60.0),
               InconsistentMeasurement);
  EXPECT_THROW(pressure_from_current(g, aluminum(), vacuum_env(), 0.0, 60.0), InvalidInput);
  EXPECT_THROW(pressure_from_current(g, aluminum(), vacuum_env(), -1e-9, 60.0), InvalidInput);
}

TEST(Noise, ZeroRateIsIdentity) {
  EnvironmentState env;
  const IVCurve base = ramp(50);
  const IVCurve out = emission_noise(env, base);
  EXPECT_EQ(out.samples, base.samples);
  EXPECT_EQ(out.metadata, base.metadata);
}

TEST(Noise, DeterministicForSeed) {
  EnvironmentState env;
  env.noise_spike_rate = 0.3;
  env.noise_spike_amplitude = 2.0;
  env.rng_seed = 42;
  const IVCurve base = ramp(200);
  EXPECT_EQ(emission_noise(env, base).samples, emission_noise(env, base).samples);
  EnvironmentState other = env;
  other.rng_seed = 43;
  EXPECT_NE(emission_noise(env, base).samples, emission_noise(other, base).samples);
}

TEST(Noise, SpikeCountWithinBinomialBounds) {
  // Binomial(1000, 0.1): mean 100, sigma 9.487.
  const double mean = 100.0;
  const double sigma = std::sqrt(1000.0 * 0.1 * 0.9);
  const IVCurve base = ramp(1000);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    EnvironmentState env;
    env.noise_spike_rate = 0.1;
    env.noise_spike_amplitude = 1.5;
    env.rng_seed = seed;
    const IVCurve out = emission_noise(env, base);
    int spikes = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      EXPECT_EQ(out.samples[i].voltage, base.samples[i].voltage);
      EXPECT_GE(out.samples[i].current, base.samples[i].current);
      if (out.samples[i].current != base.samples[i].current) {
        ++spikes;
        EXPECT_DOUBLE_EQ(out.samples[i].current, 2.5 * base.samples[i].current);
      }
    }
    EXPECT_LT(std::abs(spikes - mean), 3.0 * sigma) << "seed " << seed;
    EXPECT_EQ(out.metadata.at("noise_spikes"), std::to_string(spikes));
  }
}
