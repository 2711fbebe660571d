#pragma once

#include "vacemit/types.hpp"

namespace vacemit {

/// Richardson-Dushman thermionic emission, J = A T^2 exp(-phi / kT) in A/m^2.
/// T = 0 yields the limit value 0.
double thermionic_current_density(const Material& material, double temperature);

/// Fowler-Nordheim current density at 0 K including the Fermi-level term,
///   J = q^3/(4 pi^2 hbar) * sqrt(mu) / ((mu + phi) sqrt(phi)) * F^2
///       * exp(-4 sqrt(2 m phi^3) / (3 hbar q F))
/// with mu and phi converted to joules. Field in V/m, result in A/m^2.
double fn_current_density_full(const Material& material, double field);

/// a_fn = k1 / phi, b_fn = k2 phi^{3/2}, phi in eV.
FNCoefficients fn_coefficients(const Material& material);
FNCoefficients fn_coefficients(double work_function_ev);

/// J = a F^2 exp(-b / F). F = 0 yields 0.
double fn_current_density_simplified(const FNCoefficients& coeffs, double field);

struct LocalField {
  double field;        // V/m
  double enhancement;  // dimensionless, beta * gap
};

/// F = beta V.
LocalField local_field(const DeviceGeometry& geometry, double voltage);

}  // namespace vacemit
