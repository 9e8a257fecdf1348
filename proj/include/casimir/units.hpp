#pragma once

// Physical constants and the unit conversions used at the configuration
// boundary. Everything downstream works in SI: rad/s, m, K, Pa.

namespace casimir::units {

struct PhysicalConstants {
  double hbar;  // J s
  double k_B;   // J/K
  double c;     // m/s
  double eV;    // J per electronvolt
};

// CODATA 2018 (exact SI values for k_B, c, eV).
inline constexpr PhysicalConstants codata2018{1.054571817e-34, 1.380649e-23,
                                              299792458.0, 1.602176634e-19};

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double zeta3 = 1.2020569031595942854;

/// Converts a photon energy hbar*omega given in eV to omega in rad/s.
/// Throws std::domain_error for negative energies.
double ev_to_angular_frequency(double energy_ev,
                               const PhysicalConstants& k = codata2018);

/// Inverse of ev_to_angular_frequency.
double angular_frequency_to_ev(double omega,
                               const PhysicalConstants& k = codata2018);

/// xi_l = 2 pi k_B T l / hbar. Throws std::domain_error for T <= 0.
double matsubara_frequency(unsigned l, double temperature,
                           const PhysicalConstants& k = codata2018);

inline constexpr double micrometre = 1e-6;

}  // namespace casimir::units
