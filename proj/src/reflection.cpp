#include "casimir/reflection.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/units.hpp"

namespace casimir {

using units::codata2018;

const char* to_string(Polarization pol) { return pol == Polarization::TM ? "TM" : "TE"; }

ImagAxisPoint ImagAxisPoint::make(unsigned l, double temperature, double k_perp) {
  ImagAxisPoint p;
  p.l = l;
  p.xi = units::matsubara_frequency(l, temperature);
  p.k_perp = k_perp;
  const double kz = p.xi / codata2018.c;
  p.q = std::sqrt(k_perp * k_perp + kz * kz);
  return p;
}

double DimensionlessPoint::s() const { return std::sqrt(w * w + 2.0 * w * t); }

double DimensionlessPoint::omega_c() const { return codata2018.c / (2.0 * a); }

double r_imag_from_q(Polarization pol, double eps, double mu, double q, double xi) {
  // p^2 = k^2 + eps mu xi^2/c^2 = q^2 + (eps mu - 1) xi^2/c^2
  const double kz = xi / codata2018.c;
  const double p = std::sqrt(q * q + (eps * mu - 1.0) * kz * kz);
  const double f = pol == Polarization::TM ? eps : mu;
  return (f * q - p) / (f * q + p);
}

double r_imag(Polarization pol, const ImagAxisPoint& point, const MaterialSpec& spec) {
  if (point.l == 0)
    throw std::domain_error("r_imag: l = 0 requires r_zero_frequency");
  const double eps = eps_imaginary(spec, point.xi);
  const double mu = mu_matsubara(spec, point.l);
  return r_imag_from_q(pol, eps, mu, point.q, point.xi);
}

double r_zero_frequency(Polarization pol, const MaterialSpec& spec, double k_perp) {
  if (pol == Polarization::TM) return 1.0;
  const double mu0 = spec.mu_static;
  if (spec.eps_model == PermittivityModel::Drude) return (mu0 - 1.0) / (mu0 + 1.0);
  const double kp = spec.omega_p / codata2018.c;
  const double p0 = std::sqrt(k_perp * k_perp + mu0 * kp * kp);
  return (mu0 * k_perp - p0) / (mu0 * k_perp + p0);
}

std::complex<double> fresnel_evanescent(Polarization pol, std::complex<double> eps,
                                        std::complex<double> mu, double t, double w, double s) {
  // (w+t)^2 - eps mu t^2 written as s^2 + (1 - eps mu) t^2; w enters via s.
  (void)w;
  const std::complex<double> p = std::sqrt(s * s + (1.0 - eps * mu) * (t * t));
  const std::complex<double> f = pol == Polarization::TM ? eps : mu;
  return (f * s - p) / (f * s + p);
}

std::complex<double> r_real_dimensionless(Polarization pol, const DimensionlessPoint& point,
                                          const MaterialSpec& spec) {
  if (!(point.t > 0.0)) throw std::domain_error("r_real_dimensionless: t must be positive");
  if (!(point.w > 0.0))
    throw std::domain_error("r_real_dimensionless: only the evanescent region w > 0 is supported");
  const double omega = point.omega_c() * point.t;
  return fresnel_evanescent(pol, eps_real(spec, omega), mu_real(spec, omega), point.t, point.w,
                            point.s());
}

}  // namespace casimir
