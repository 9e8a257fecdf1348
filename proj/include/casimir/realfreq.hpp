#pragma once

#include <vector>

#include "casimir/matsubara.hpp"

namespace casimir {

/// Integrand of the evanescent fraction in the variables (t, w).
///
/// value(t, w) = Im[R e^{-s}/(1 - R e^{-s})] (w + t) s with R = r1 r2 and
/// s = sqrt(w^2 + 2wt); thermal_weight(t) = coth(hbar c t/(4 a k_B T)).
class EvanescentIntegrand {
 public:
  EvanescentIntegrand(Polarization pol, const PlateSystem& sys, PermittivityModel model);

  Polarization pol() const { return pol_; }
  /// -hbar c/(32 pi^2 a^4), in Pa.
  double prefactor() const { return prefactor_; }
  double thermal_weight(double t) const;
  double value(double t, double w) const;
  /// Same integrand per unit s instead of per unit w: s^2 Im[...].
  double value_in_s(double t, double s) const;
  /// omega_1/omega_c and omega_2/omega_c of every magnetic plate.
  std::vector<double> permeability_breakpoints() const;

 private:
  double im_ratio(double t, double w, double s) const;

  Polarization pol_;
  MaterialSpec m1_, m2_;
  double a_, T_;
  double omega_c_;
  double prefactor_;
  double thermal_scale_;
};

struct EvanescentResult {
  double value = 0.0;      // Pa
  double abs_error = 0.0;  // Pa, outer estimate plus propagated inner error
  std::size_t outer_panels = 0;
  std::size_t evaluations = 0;
};

/// Evanescent fraction of one polarization: the double integral over
/// t in [t_min, t_max], w in [0, w_max] by nested adaptive Gauss-Kronrod.
/// Throws NonConvergenceError when a panel budget is exhausted.
EvanescentResult force_evanescent(Polarization pol, const PlateSystem& sys,
                                  PermittivityModel model, const NumericsConfig& cfg);

/// F_pol (Matsubara) - F_pol^evan.
ForceEstimate force_propagating(Polarization pol, const PlateSystem& sys,
                                PermittivityModel model, const NumericsConfig& cfg);

/// Matsubara totals plus both evanescent/propagating splits.
ForceBreakdown force_breakdown(const PlateSystem& sys, PermittivityModel model,
                               const NumericsConfig& cfg);

struct PlasmaNullReport {
  double max_ratio = 0.0;  // max |F^evan| / |F_ref| over the grid and polarizations
  double bound = 1e-6;
  bool passed = false;
  struct Entry {
    double a;
    Polarization pol;
    double ratio;
  };
  std::vector<Entry> entries;
};

/// Evaluates the plasma-model evanescent fractions over a separation grid.
PlasmaNullReport certify_plasma_null(const PlateSystem& sys, const std::vector<double>& a_grid,
                                     const NumericsConfig& cfg);

/// The grid {0.5, 1, 2, 4, 6} um.
std::vector<double> standard_null_grid();

}  // namespace casimir
