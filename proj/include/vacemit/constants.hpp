#pragma once

namespace vacemit::constants {

// CODATA 2018. q, h and k are exact by SI definition.
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double electron_charge = 1.602176634e-19;       // C
inline constexpr double planck = 6.62607015e-34;                 // J s
inline constexpr double reduced_planck = planck / (2.0 * pi);    // J s
inline constexpr double electron_mass = 9.1093837015e-31;        // kg
inline constexpr double boltzmann_J = 1.380649e-23;              // J/K
inline constexpr double boltzmann_eV = boltzmann_J / electron_charge;  // eV/K

inline constexpr double ev_to_joule(double ev) { return ev * electron_charge; }
inline constexpr double joule_to_ev(double j) { return j / electron_charge; }

/// Physical constants as one value, for callers that want to pass them around
/// or print them.
struct PhysicalConstants {
  double boltzmann_J_per_K;
  double boltzmann_eV_per_K;
  double reduced_planck_hbar;
  double electron_charge_q;
  double electron_mass_m;
};

const PhysicalConstants& physical();

/// First and second Fowler-Nordheim constants in the units used throughout:
/// field in V/m, work function in eV, current density in A/m^2.
///   k1 = q^2 / (8 pi^2 hbar)          [A eV V^-2]
///   k2 = 4 sqrt(2 m q) / (3 hbar)     [V m^-1 eV^-3/2]
/// Both are derived from the full expression with mu = phi, not typed in.
struct FowlerNordheimConstants {
  double k1;
  double k2;
};

const FowlerNordheimConstants& fowler_nordheim();

}  // namespace vacemit::constants
