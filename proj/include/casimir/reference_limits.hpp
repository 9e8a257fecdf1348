#pragma once

#include "casimir/matsubara.hpp"
#include "casimir/units.hpp"

namespace casimir::reference {

/// Li_3(x) = sum_{n>=1} x^n/n^3 for -1 <= x <= 1, to ~1e-15 absolute.
/// Throws std::domain_error outside [-1, 1].
double polylog3(double x);

struct ClassicalLimitResult {
  Polarization pol;
  double r1r2;  // product of zero-frequency reflection coefficients
  double value; // Pa
};

/// Large-separation limit of one polarization: only the l = 0 term survives
/// and, for the k-independent coefficients of the Drude model, integrates to
/// -(k_B T/(8 pi a^3)) Li_3(r1 r2). For the plasma TE coefficient (which
/// depends on k) the a -> infinity value r -> -1 is used.
ClassicalLimitResult classical_limit(Polarization pol, const PlateSystem& sys,
                                     PermittivityModel model,
                                     const units::PhysicalConstants& k = units::codata2018);

/// Zero-temperature pressure between ideal metal plates, -pi^2 hbar c/(240 a^4).
double ideal_metal_zero_T(double a, const units::PhysicalConstants& k = units::codata2018);

}  // namespace casimir::reference
