#pragma once

#include <complex>

#include "casimir/materials.hpp"

namespace casimir {

enum class Polarization { TM, TE };

const char* to_string(Polarization pol);

/// A point (xi_l, k_perp) on the imaginary frequency axis.
struct ImagAxisPoint {
  unsigned l = 0;
  double xi = 0.0;      // rad/s
  double k_perp = 0.0;  // rad/m
  double q = 0.0;       // sqrt(k_perp^2 + xi^2/c^2)

  static ImagAxisPoint make(unsigned l, double temperature, double k_perp);
};

/// Real-axis point in the dimensionless variables t = 2a omega/c and
/// w = 2a k_perp - t. The evanescent region is w > 0.
struct DimensionlessPoint {
  double t = 0.0;
  double w = 0.0;
  double a = 0.0;  // separation in m, needed to map t back to omega

  /// s = sqrt(w^2 + 2wt) = 2a q, the dimensionless decay constant.
  double s() const;
  /// omega_c = c/(2a).
  double omega_c() const;
};

/// Reflection coefficient at a Matsubara frequency with l >= 1.
/// Throws std::domain_error when l == 0 (see r_zero_frequency).
double r_imag(Polarization pol, const ImagAxisPoint& point, const MaterialSpec& spec);

/// Same coefficient written in terms of q and xi only; used in the inner
/// Matsubara integrand where q is the integration variable.
double r_imag_from_q(Polarization pol, double eps, double mu, double q, double xi);

/// Analytic xi -> 0 limits for the Drude and plasma models.
/// TM: 1. TE Drude: (mu0-1)/(mu0+1). TE plasma: (mu0 k - p0)/(mu0 k + p0)
/// with p0 = sqrt(k^2 + mu0 omega_p^2/c^2).
double r_zero_frequency(Polarization pol, const MaterialSpec& spec, double k_perp);

/// Evanescent-region coefficient on the real axis (t > 0, w > 0).
/// Throws std::domain_error for w <= 0 or t <= 0.
std::complex<double> r_real_dimensionless(Polarization pol, const DimensionlessPoint& point,
                                          const MaterialSpec& spec);

/// Bare evanescent coefficient for given response values, with s supplied
/// by the caller. The inner radical uses the principal square root.
std::complex<double> fresnel_evanescent(Polarization pol, std::complex<double> eps,
                                        std::complex<double> mu, double t, double w, double s);

}  // namespace casimir
