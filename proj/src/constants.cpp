#include "vacemit/constants.hpp"

#include <cmath>

namespace vacemit::constants {

const PhysicalConstants& physical() {
  static const PhysicalConstants values{boltzmann_J, boltzmann_eV, reduced_planck,
                                        electron_charge, electron_mass};
  return values;
}

const FowlerNordheimConstants& fowler_nordheim() {
  // With mu = phi the full prefactor q^3/(4 pi^2 hbar) / (2 phi_J) becomes
  // k1 / phi_eV, and the exponent 4 sqrt(2 m) (q phi_eV)^{3/2} / (3 hbar q F)
  // becomes k2 phi_eV^{3/2} / F.
  static const FowlerNordheimConstants values{
      electron_charge * electron_charge / (8.0 * pi * pi * reduced_planck),
      4.0 * std::sqrt(2.0 * electron_mass * electron_charge) / (3.0 * reduced_planck)};
  return values;
}

}  // namespace vacemit::constants
