#include "casimir/units.hpp"

#include <stdexcept>

namespace casimir::units {

double ev_to_angular_frequency(double energy_ev, const PhysicalConstants& k) {
  if (!(energy_ev >= 0.0))
    throw std::domain_error("energy must be non-negative");
  return energy_ev * k.eV / k.hbar;
}

double angular_frequency_to_ev(double omega, const PhysicalConstants& k) {
  if (!(omega >= 0.0))
    throw std::domain_error("angular frequency must be non-negative");
  return omega * k.hbar / k.eV;
}

double matsubara_frequency(unsigned l, double temperature,
                           const PhysicalConstants& k) {
  if (!(temperature > 0.0))
    throw std::domain_error("temperature must be positive");
  // Linear in l by construction: xi_l = l * xi_1 with the same rounding.
  const double xi1 = 2.0 * pi * k.k_B * temperature / k.hbar;
  return static_cast<double>(l) * xi1;
}

}  // namespace casimir::units
