#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

/// Two semi-infinite plates a metres apart at temperature T.
struct PlateSystem {
  MaterialSpec plate1;
  MaterialSpec plate2;
  double a = 1e-6;    // m
  double T = 300.0;   // K

  void validate() const;
  PlateSystem with_model(PermittivityModel model) const;
  PlateSystem with_separation(double separation) const;
  PlateSystem swapped() const { return {plate2, plate1, a, T}; }
};

namespace scenarios {
PlateSystem au_ni(double a = 1e-6, double T = 300.0);
PlateSystem ni_ni(double a = 1e-6, double T = 300.0);
PlateSystem au_au(double a = 1e-6, double T = 300.0);
}  // namespace scenarios

enum class InnerQuadrature { GaussKronrod15 };

struct NumericsConfig {
  double rel_tol = 1e-9;
  double matsubara_tail_tol = 1e-10;
  unsigned l_max_cap = 20000;
  InnerQuadrature inner_quadrature = InnerQuadrature::GaussKronrod15;
  // Real-frequency domain in the dimensionless variables t, w.
  double t_min_cutoff = 1e-14;
  double t_max = 60.0;
  double w_max = 80.0;
  std::size_t max_panels = 10000;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Raised when a sum or quadrature cannot meet its tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double partial, double achieved)
      : std::runtime_error(what), partial_(partial), achieved_(achieved) {}
  double partial() const { return partial_; }
  double achieved() const { return achieved_; }

 private:
  double partial_;
  double achieved_;
};

/// A force value together with its estimated absolute error (Pa).
struct ForceEstimate {
  double value = 0.0;
  double abs_error = 0.0;
  unsigned terms = 0;  // Matsubara terms summed (0 for real-axis integrals)
};

/// Signed pressures in Pa. Evanescent/propagating fractions are filled by
/// the real-frequency engine and stay empty otherwise.
struct ForceBreakdown {
  double a = 0.0;
  double T = 0.0;
  PermittivityModel model = PermittivityModel::Drude;
  double F_total = 0.0;
  double F_TM = 0.0;
  double F_TE = 0.0;
  std::optional<double> F_TM_evan, F_TM_prop, F_TE_evan, F_TE_prop;
  double F_ref = 0.0;
  double err_TM = 0.0, err_TE = 0.0;
  std::optional<double> err_TM_evan, err_TE_evan;

  double ratio(double force) const { return force / F_ref; }
  double ratio_total() const { return ratio(F_total); }
  double ratio_TM() const { return ratio(F_TM); }
  double ratio_TE() const { return ratio(F_TE); }
  bool has_breakdown() const { return F_TM_evan.has_value(); }
};

/// High-temperature Drude reference -k_B T zeta(3)/(8 pi a^3), the l = 0
/// TM term with r = 1 (one half of the ideal-metal high-T pressure).
double reference_high_temperature(double a, double T);

/// Integral over k_perp of k q R e^{-2aq}/(1 - R e^{-2aq}) at Matsubara
/// index l, in m^-3, with R = r1 r2. For l = 0 the analytic zero-frequency
/// coefficients are used.
quadrature::Result matsubara_inner_integral(Polarization pol, const PlateSystem& sys,
                                            PermittivityModel model, unsigned l,
                                            const NumericsConfig& cfg);

/// One polarization of the Lifshitz pressure as a Matsubara sum.
ForceEstimate force_polarization_matsubara(Polarization pol, const PlateSystem& sys,
                                           PermittivityModel model, const NumericsConfig& cfg);

/// F_TM + F_TE plus the reference; evanescent fields left empty.
ForceBreakdown force_total(const PlateSystem& sys, PermittivityModel model,
                           const NumericsConfig& cfg);

}  // namespace casimir
