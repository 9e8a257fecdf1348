#include "casimir/realfreq.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/units.hpp"

namespace casimir {

using units::codata2018;

EvanescentIntegrand::EvanescentIntegrand(Polarization pol, const PlateSystem& sys,
                                         PermittivityModel model)
    : pol_(pol),
      m1_(sys.plate1.with_model(model)),
      m2_(sys.plate2.with_model(model)),
      a_(sys.a),
      T_(sys.T),
      omega_c_(codata2018.c / (2.0 * sys.a)) {
  const double a2 = sys.a * sys.a;
  prefactor_ = -codata2018.hbar * codata2018.c / (32.0 * units::pi * units::pi * a2 * a2);
  thermal_scale_ = codata2018.hbar * codata2018.c / (4.0 * sys.a * codata2018.k_B * sys.T);
}

double EvanescentIntegrand::thermal_weight(double t) const {
  return 1.0 / std::tanh(thermal_scale_ * t);
}

double EvanescentIntegrand::im_ratio(double t, double w, double s) const {
  const double omega = omega_c_ * t;
  const auto r1 = fresnel_evanescent(pol_, eps_real(m1_, omega), mu_real(m1_, omega), t, w, s);
  const auto r2 = fresnel_evanescent(pol_, eps_real(m2_, omega), mu_real(m2_, omega), t, w, s);
  const std::complex<double> x = r1 * r2 * std::exp(-s);
  // Im[x/(1-x)] = Im x / |1-x|^2
  return x.imag() / std::norm(1.0 - x);
}

double EvanescentIntegrand::value(double t, double w) const {
  const double s = std::sqrt(w * w + 2.0 * w * t);
  return im_ratio(t, w, s) * (w + t) * s;
}

double EvanescentIntegrand::value_in_s(double t, double s) const {
  // w = sqrt(t^2 + s^2) - t without cancellation.
  const double w = s * s / (std::sqrt(t * t + s * s) + t);
  return im_ratio(t, w, s) * s * s;
}

std::vector<double> EvanescentIntegrand::permeability_breakpoints() const {
  std::vector<double> out;
  for (const MaterialSpec* m : {&m1_, &m2_}) {
    if (!m->magnetic()) continue;
    out.push_back(m->mu_omega1 / omega_c_);
    out.push_back(m->mu_omega2 / omega_c_);
  }
  return out;
}

namespace {

std::vector<double> decade_cuts(double lo, double hi) {
  std::vector<double> cuts;
  for (int k = static_cast<int>(std::floor(std::log10(lo))) + 1;
       k <= static_cast<int>(std::ceil(std::log10(hi))); ++k) {
    const double x = std::pow(10.0, k);
    if (x > lo && x < hi) cuts.push_back(x);
  }
  return cuts;
}

}  // namespace

EvanescentResult force_evanescent(Polarization pol, const PlateSystem& sys,
                                  PermittivityModel model, const NumericsConfig& cfg) {
  sys.validate();
  cfg.validate();
  const EvanescentIntegrand integrand(pol, sys, model);

  // Absolute floor in integral units: 1e-3 rel_tol of |F_ref|. Everything
  // reported is O(F_ref) or is a null result judged against F_ref.
  const double ref_units =
      std::abs(reference_high_temperature(sys.a, sys.T) / integrand.prefactor());
  const double abs_floor = 1e-3 * cfg.rel_tol * ref_units;
  const double log_span = std::log(cfg.t_max / cfg.t_min_cutoff);

  quadrature::Options inner_opt;
  inner_opt.rel_tol = 1e-2 * cfg.rel_tol;
  inner_opt.rel_tol_of_abs = 1e-2 * cfg.rel_tol;
  inner_opt.max_panels = cfg.max_panels;

  quadrature::Options outer_opt;
  outer_opt.rel_tol = cfg.rel_tol;
  outer_opt.abs_tol = abs_floor;
  outer_opt.max_panels = cfg.max_panels;

  std::vector<double> s_cuts = decade_cuts(1e-9, 1e2);
  for (double x : {2.0, 5.0, 20.0, 50.0}) s_cuts.push_back(x);

  std::size_t evaluations = 0;
  auto outer = [&](double t) -> quadrature::Sample {
    const double weight = integrand.thermal_weight(t);
    // w in [0, w_max] maps to s in [0, sqrt(w_max^2 + 2 w_max t)]; (w+t) dw = s ds.
    const double s_max = std::sqrt(cfg.w_max * cfg.w_max + 2.0 * cfg.w_max * t);
    auto f = [&](double s) { return integrand.value_in_s(t, s); };
    // Spread 10% of the floor uniformly in ln t over the outer domain.
    quadrature::Options opt = inner_opt;
    opt.abs_tol = 0.1 * abs_floor / (weight * t * log_span);
    const auto inner = quadrature::integrate(f, 0.0, s_max, s_cuts, opt);
    evaluations += inner.evaluations;
    return {weight * inner.value, weight * inner.abs_error};
  };

  std::vector<double> t_cuts = decade_cuts(cfg.t_min_cutoff, cfg.t_max);
  for (double x : integrand.permeability_breakpoints()) t_cuts.push_back(x);
  for (double x : {2.0, 5.0, 20.0, 50.0}) t_cuts.push_back(x);

  const auto res = quadrature::integrate(outer, cfg.t_min_cutoff, cfg.t_max, t_cuts, outer_opt);
  const double scale = std::abs(integrand.prefactor());
  const double total_err = res.abs_error + res.aux;
  // Near a sign change of the integral only the absolute scale is
  // meaningful, so the gate is 10x looser than the floor aimed for.
  const double target = std::max(10.0 * abs_floor, cfg.rel_tol * std::abs(res.value));
  if (!res.converged || total_err > 2.0 * target) {
    throw NonConvergenceError(
        std::string("evanescent ") + to_string(pol) + " integral did not converge",
        integrand.prefactor() * res.value, scale * total_err);
  }
  // The integrand stays finite as t -> 0 for magnetic Drude plates, so the
  // sliver [0, t_min] below the cutoff is counted as error.
  const double truncation = std::abs(outer(cfg.t_min_cutoff).value) * cfg.t_min_cutoff;
  EvanescentResult out;
  out.value = integrand.prefactor() * res.value;
  out.abs_error = scale * (total_err + truncation);
  out.outer_panels = res.panels;
  out.evaluations = evaluations;
  return out;
}

ForceEstimate force_propagating(Polarization pol, const PlateSystem& sys,
                                PermittivityModel model, const NumericsConfig& cfg) {
  const auto full = force_polarization_matsubara(pol, sys, model, cfg);
  const auto evan = force_evanescent(pol, sys, model, cfg);
  return {full.value - evan.value, full.abs_error + evan.abs_error, full.terms};
}

ForceBreakdown force_breakdown(const PlateSystem& sys, PermittivityModel model,
                               const NumericsConfig& cfg) {
  ForceBreakdown out = force_total(sys, model, cfg);
  const auto tm = force_evanescent(Polarization::TM, sys, model, cfg);
  const auto te = force_evanescent(Polarization::TE, sys, model, cfg);
  out.F_TM_evan = tm.value;
  out.F_TM_prop = out.F_TM - tm.value;
  out.F_TE_evan = te.value;
  out.F_TE_prop = out.F_TE - te.value;
  out.err_TM_evan = tm.abs_error;
  out.err_TE_evan = te.abs_error;
  return out;
}

std::vector<double> standard_null_grid() {
  return {0.5e-6, 1e-6, 2e-6, 4e-6, 6e-6};
}

PlasmaNullReport certify_plasma_null(const PlateSystem& sys, const std::vector<double>& a_grid,
                                     const NumericsConfig& cfg) {
  PlasmaNullReport report;
  for (double a : a_grid) {
    const PlateSystem at = sys.with_separation(a);
    const double ref = std::abs(reference_high_temperature(a, sys.T));
    for (Polarization pol : {Polarization::TM, Polarization::TE}) {
      const auto evan = force_evanescent(pol, at, PermittivityModel::Plasma, cfg);
      const double ratio = std::abs(evan.value) / ref;
      report.entries.push_back({a, pol, ratio});
      report.max_ratio = std::max(report.max_ratio, ratio);
    }
  }
  report.passed = report.max_ratio < report.bound;
  return report;
}

}  // namespace casimir
