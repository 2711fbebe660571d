#include "vacemit/emission.hpp"

#include <cmath>

#include "vacemit/constants.hpp"
#include "vacemit/errors.hpp"

namespace vacemit {

namespace c = constants;

double thermionic_current_density(const Material& material, double temperature) {
  validate(material);
  if (!std::isfinite(temperature) || temperature < 0.0) {
    throw InvalidInput("thermionic_current_density: temperature must be finite and >= 0");
  }
  if (temperature == 0.0) return 0.0;
  const double barrier = material.work_function_phi / (c::boltzmann_eV * temperature);
  return material.richardson_constant_A * temperature * temperature * std::exp(-barrier);
}

double fn_current_density_full(const Material& material, double field) {
  validate(material);
  if (!std::isfinite(field) || field < 0.0) {
    throw InvalidInput("fn_current_density_full: field must be finite and >= 0");
  }
  if (field == 0.0) return 0.0;

  const double phi = c::ev_to_joule(material.work_function_phi);
  const double mu = c::ev_to_joule(material.fermi_level_mu);
  const double q = c::electron_charge;
  const double hbar = c::reduced_planck;

  const double prefactor =
      q * q * q / (4.0 * c::pi * c::pi * hbar) * std::sqrt(mu) / ((mu + phi) * std::sqrt(phi));
  const double exponent =
      4.0 * std::sqrt(2.0 * c::electron_mass * phi * phi * phi) / (3.0 * hbar * q * field);
  return prefactor * field * field * std::exp(-exponent);
}

FNCoefficients fn_coefficients(double work_function_ev) {
  if (!std::isfinite(work_function_ev) || work_function_ev <= 0.0) {
    throw InvalidInput("fn_coefficients: work function must be > 0");
  }
  const auto& k = c::fowler_nordheim();
  return FNCoefficients{k.k1 / work_function_ev,
                        k.k2 * work_function_ev * std::sqrt(work_function_ev), k.k1, k.k2};
}

FNCoefficients fn_coefficients(const Material& material) {
  validate(material);
  return fn_coefficients(material.work_function_phi);
}

double fn_current_density_simplified(const FNCoefficients& coeffs, double field) {
  validate(coeffs);
  if (!std::isfinite(field) || field < 0.0) {
    throw InvalidInput("fn_current_density_simplified: field must be finite and >= 0");
  }
  if (field == 0.0) return 0.0;
  return coeffs.a_fn * field * field * std::exp(-coeffs.b_fn / field);
}

LocalField local_field(const DeviceGeometry& geometry, double voltage) {
  validate(geometry);
  if (!std::isfinite(voltage) || voltage < 0.0) {
    throw InvalidInput("local_field: voltage must be finite and >= 0");
  }
  return LocalField{geometry.field_conversion_beta * voltage,
                    geometry.field_conversion_beta * geometry.gap_d};
}

}  // namespace vacemit
