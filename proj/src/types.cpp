#include "vacemit/types.hpp"

#include <cmath>

#include "vacemit/errors.hpp"

namespace vacemit {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

Material aluminum() { return Material{"aluminum", 4.28, 11.7, 1.20e6}; }

// mu taken equal to phi, the regime where the simplified law is exact.
Material tungsten() { return Material{"tungsten", 4.5, 4.5, 1.20e6}; }

void validate(const Material& m) {
  require(positive(m.work_function_phi), "material: work_function_phi must be > 0");
  require(positive(m.fermi_level_mu), "material: fermi_level_mu must be > 0");
  require(positive(m.richardson_constant_A), "material: richardson_constant_A must be > 0");
}

void validate(const FNCoefficients& c) {
  require(positive(c.a_fn), "fn coefficients: a_fn must be > 0");
  require(non_negative(c.b_fn), "fn coefficients: b_fn must be >= 0");
}

void validate(const DeviceGeometry& g) {
  require(positive(g.gap_d), "geometry: gap_d must be > 0");
  require(g.num_emitters_N >= 1, "geometry: num_emitters_N must be >= 1");
  require(positive(g.pitch), "geometry: pitch must be > 0");
  require(positive(g.emitting_area_per_tip), "geometry: emitting_area_per_tip must be > 0");
  require(positive(g.field_conversion_beta), "geometry: field_conversion_beta must be > 0");
  require(g.breakdown_field_limit > 0.0 && !std::isnan(g.breakdown_field_limit),
          "geometry: breakdown_field_limit must be > 0");
  require(positive(g.screening.coefficient), "geometry: screening coefficient must be > 0");
}

void validate(const EnvironmentState& e) {
  require(positive(e.temperature_T), "environment: temperature_T must be > 0");
  require(non_negative(e.pressure_p), "environment: pressure_p must be >= 0");
  require(positive(e.gas_cross_section_sigma),
          "environment: gas_cross_section_sigma must be > 0");
  require(std::isfinite(e.surface_delta_phi), "environment: surface_delta_phi must be finite");
  require(non_negative(e.noise_spike_rate), "environment: noise_spike_rate must be >= 0");
  require(non_negative(e.noise_spike_amplitude),
          "environment: noise_spike_amplitude must be >= 0");
}

void validate(const IVCurve& curve) {
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const auto& s = curve.samples[i];
    require(std::isfinite(s.voltage) && std::isfinite(s.current),
            "iv curve: samples must be finite");
    require(s.current >= 0.0, "iv curve: currents must be >= 0");
    if (i > 0) {
      require(s.voltage > curve.samples[i - 1].voltage,
              "iv curve: voltages must be strictly increasing");
    }
  }
}

}  // namespace vacemit
