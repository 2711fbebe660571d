#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vacemit {

/// Emitter material. Energies in eV, Richardson constant in A m^-2 K^-2.
struct Material {
  std::string name = "aluminum";
  double work_function_phi = 4.28;
  double fermi_level_mu = 11.7;
  double richardson_constant_A = 1.20e6;
};

Material aluminum();
Material tungsten();

/// Simplified Fowler-Nordheim coefficients, J = a F^2 exp(-b/F).
struct FNCoefficients {
  double a_fn;  // A V^-2
  double b_fn;  // V/m
  double k1;
  double k2;
};

enum class ScreeningKind { none, exponential };

/// Self-screening between neighbouring emitters of an array.
/// exponential: s = 1 - exp(-coefficient * pitch / gap).
struct ScreeningModel {
  ScreeningKind kind = ScreeningKind::exponential;
  double coefficient = 2.0;
};

inline constexpr double vacuum_breakdown_field = 1e10;  // V/m
inline constexpr double air_breakdown_field = 3e8;      // V/m

/// Lateral diode array. Lengths in m, beta in m^-1, fields in V/m.
struct DeviceGeometry {
  double gap_d = 2e-6;
  int num_emitters_N = 20;
  double pitch = 20e-6;
  // 100 nm apex times a 10 um etch depth.
  double emitting_area_per_tip = 1e-12;
  double field_conversion_beta = 1e8;
  double breakdown_field_limit = vacuum_breakdown_field;
  ScreeningModel screening{};
};

/// Ambient conditions around the emitters.
struct EnvironmentState {
  double temperature_T = 300.0;             // K
  double pressure_p = 101325.0;             // Pa
  double gas_cross_section_sigma = 4.3e-19;  // m^2, N2 kinetic cross-section
  double surface_delta_phi = 0.0;           // eV, 0 for a clean surface
  double noise_spike_rate = 0.0;            // spikes per sample
  double noise_spike_amplitude = 1.0;       // multiple of the base current
  std::uint64_t rng_seed = 1;
  // Scale current by the gas-collision survival probability. Off by default:
  // the exponential survival law is meaningless at atmospheric pressure.
  bool ballistic_attenuation = false;
};

struct IVSample {
  double voltage;  // V
  double current;  // A

  friend bool operator==(const IVSample&, const IVSample&) = default;
};

/// Current-voltage curve ordered by strictly increasing voltage.
struct IVCurve {
  std::vector<IVSample> samples;
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

// Invariant checks. Each throws InvalidInput naming the offending field.
void validate(const Material& material);
void validate(const FNCoefficients& coeffs);
void validate(const DeviceGeometry& geometry);
void validate(const EnvironmentState& env);
void validate(const IVCurve& curve);

}  // namespace vacemit
