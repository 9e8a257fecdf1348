#include "casimir/matsubara.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "casimir/units.hpp"

namespace casimir {

using units::codata2018;

namespace {

// 40 e-foldings past the lower limit leave a tail below e^-40.
constexpr double kDecayWindow = 40.0;

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

void PlateSystem::validate() const {
  plate1.validate();
  plate2.validate();
  if (!(a > 0.0)) throw std::invalid_argument("separation must be positive");
  if (!(T > 0.0)) throw std::invalid_argument("temperature must be positive");
}

PlateSystem PlateSystem::with_model(PermittivityModel model) const {
  return {plate1.with_model(model), plate2.with_model(model), a, T};
}

PlateSystem PlateSystem::with_separation(double separation) const {
  return {plate1, plate2, separation, T};
}

namespace scenarios {
PlateSystem au_ni(double a, double T) { return {presets::gold(), presets::nickel(), a, T}; }
PlateSystem ni_ni(double a, double T) { return {presets::nickel(), presets::nickel(), a, T}; }
PlateSystem au_au(double a, double T) { return {presets::gold(), presets::gold(), a, T}; }
}  // namespace scenarios

void NumericsConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw std::invalid_argument("rel_tol must lie in (0, 1)");
  if (!(matsubara_tail_tol > 0.0 && matsubara_tail_tol <= rel_tol))
    throw std::invalid_argument("matsubara_tail_tol must lie in (0, rel_tol]");
  if (l_max_cap == 0) throw std::invalid_argument("l_max_cap must be positive");
  if (!(t_min_cutoff > 0.0)) throw std::invalid_argument("t_min_cutoff must be positive");
  if (!(t_max > t_min_cutoff)) throw std::invalid_argument("t_max must exceed t_min_cutoff");
  if (!(w_max > 0.0)) throw std::invalid_argument("w_max must be positive");
  if (max_panels < 2) throw std::invalid_argument("max_panels must be at least 2");
}

double reference_high_temperature(double a, double T) {
  if (!(a > 0.0) || !(T > 0.0))
    throw std::domain_error("reference_high_temperature: a and T must be positive");
  return -codata2018.k_B * T * units::zeta3 / (8.0 * units::pi * a * a * a);
}

quadrature::Result matsubara_inner_integral(Polarization pol, const PlateSystem& sys,
                                            PermittivityModel model, unsigned l,
                                            const NumericsConfig& cfg) {
  const MaterialSpec m1 = sys.plate1.with_model(model);
  const MaterialSpec m2 = sys.plate2.with_model(model);
  const double two_a = 2.0 * sys.a;

  quadrature::Options opt;
  opt.rel_tol = 0.1 * cfg.rel_tol;
  opt.rel_tol_of_abs = 0.1 * cfg.rel_tol;
  opt.max_panels = cfg.max_panels;

  quadrature::Result res;
  if (l == 0) {
    // y = 2a k_perp; q = k_perp at zero frequency.
    auto integrand = [&](double y) {
      const double k = y / two_a;
      const double R = r_zero_frequency(pol, m1, k) * r_zero_frequency(pol, m2, k);
      const double x = R * std::exp(-y);
      return y * y * x / (1.0 - x);
    };
    const std::array<double, 3> cuts{1.0, 5.0, 15.0};
    res = quadrature::integrate(integrand, 0.0, kDecayWindow, cuts, opt);
  } else {
    const double xi = units::matsubara_frequency(l, sys.T);
    const double eps1 = eps_imaginary(m1, xi), mu1 = mu_matsubara(m1, l);
    const double eps2 = eps_imaginary(m2, xi), mu2 = mu_matsubara(m2, l);
    const double y0 = two_a * xi / codata2018.c;
    auto integrand = [&](double y) {
      const double q = y / two_a;
      const double R = r_imag_from_q(pol, eps1, mu1, q, xi) * r_imag_from_q(pol, eps2, mu2, q, xi);
      const double x = R * std::exp(-y);
      return y * y * x / (1.0 - x);
    };
    const std::array<double, 3> cuts{y0 + 1.0, y0 + 5.0, y0 + 15.0};
    res = quadrature::integrate(integrand, y0, y0 + kDecayWindow, cuts, opt);
  }
  const double jac = 1.0 / (two_a * two_a * two_a);
  res.value *= jac;
  res.abs_error *= jac;
  res.abs_integral *= jac;
  return res;
}

ForceEstimate force_polarization_matsubara(Polarization pol, const PlateSystem& sys,
                                           PermittivityModel model, const NumericsConfig& cfg) {
  sys.validate();
  cfg.validate();
  const double prefactor = -codata2018.k_B * sys.T / units::pi;

  double sum = 0.0, quad_err = 0.0, last = 0.0;
  unsigned quiet = 0;
  unsigned l = 0;
  for (; l <= cfg.l_max_cap; ++l) {
    const auto inner = matsubara_inner_integral(pol, sys, model, l, cfg);
    if (!inner.converged)
      throw NonConvergenceError("Matsubara inner integral did not converge at l = " +
                                    std::to_string(l),
                                prefactor * sum, inner.abs_error);
    const double weight = l == 0 ? 0.5 : 1.0;
    const double term = weight * inner.value;
    sum += term;
    quad_err += weight * inner.abs_error;
    last = term;
    if (l > 0 && std::abs(term) < cfg.matsubara_tail_tol * std::abs(sum)) {
      if (++quiet == 3) break;
    } else {
      quiet = 0;
    }
  }
  if (l > cfg.l_max_cap) {
    const double achieved = sum != 0.0 ? std::abs(last / sum) : std::abs(last);
    throw NonConvergenceError("Matsubara sum not converged at l_max_cap = " +
                                  std::to_string(cfg.l_max_cap) + " (last/sum = " +
                                  fmt(achieved) + ")",
                              prefactor * sum, achieved);
  }
  // Terms fall off roughly like exp(-2 a xi_1 l / c).
  const double rho = std::exp(-2.0 * sys.a * units::matsubara_frequency(1, sys.T) / codata2018.c);
  const double tail = std::abs(last) * rho / (1.0 - rho);

  ForceEstimate out;
  out.value = prefactor * sum;
  out.abs_error = std::abs(prefactor) * (quad_err + tail);
  out.terms = l + 1;
  return out;
}

ForceBreakdown force_total(const PlateSystem& sys, PermittivityModel model,
                           const NumericsConfig& cfg) {
  const auto tm = force_polarization_matsubara(Polarization::TM, sys, model, cfg);
  const auto te = force_polarization_matsubara(Polarization::TE, sys, model, cfg);
  ForceBreakdown out;
  out.a = sys.a;
  out.T = sys.T;
  out.model = model;
  out.F_TM = tm.value;
  out.F_TE = te.value;
  out.F_total = tm.value + te.value;
  out.err_TM = tm.abs_error;
  out.err_TE = te.abs_error;
  out.F_ref = reference_high_temperature(sys.a, sys.T);
  return out;
}

}  // namespace casimir
