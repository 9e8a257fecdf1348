#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace casimir {

enum class PermittivityModel { Drude, Plasma };

std::string_view to_string(PermittivityModel model);
std::optional<PermittivityModel> parse_model(std::string_view text);

/// Optical and magnetic response parameters of one plate.
///
/// Frequencies are angular (rad/s). The permeability band parameters are
/// only consulted when mu_static > 1; a nonmagnetic metal leaves them at 0.
struct MaterialSpec {
  std::string name;
  double omega_p = 0.0;  // plasma frequency
  double gamma = 0.0;    // relaxation parameter at the working temperature
  PermittivityModel eps_model = PermittivityModel::Drude;
  double mu_static = 1.0;    // initial permeability mu(0)
  double mu_omega1 = 0.0;    // mu(0) held up to here
  double mu_omega2 = 0.0;    // mu == 1 above here
  double mu_omega_ch = 0.0;  // Debye relaxation frequency

  bool magnetic() const { return mu_static != 1.0; }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  MaterialSpec with_model(PermittivityModel model) const;
  MaterialSpec with_mu_static(double mu0) const;
};

namespace presets {
/// Au: hbar*omega_p = 9.0 eV, hbar*gamma = 0.035 eV, nonmagnetic.
MaterialSpec gold();
/// Ni: hbar*omega_p = 4.89 eV, hbar*gamma = 0.0436 eV, mu(0) = 110,
/// omega_1 = 2pi 1e5, omega_2 = 6pi 1e9, omega_ch = 2pi 1e7 rad/s.
MaterialSpec nickel();
/// Looks up "au"/"gold" or "ni"/"nickel" (case-insensitive).
std::optional<MaterialSpec> by_name(std::string_view name);
}  // namespace presets

/// Permittivity at the imaginary frequency i*xi (xi > 0). Real and > 1.
/// Throws std::domain_error for xi <= 0: the static limit diverges for both
/// models and is handled by r_zero_frequency instead.
double eps_imaginary(const MaterialSpec& spec, double xi);

/// Permittivity on the real frequency axis, omega > 0.
std::complex<double> eps_real(const MaterialSpec& spec, double omega);

/// Permeability at the Matsubara frequency with index l: mu(0) for l = 0,
/// 1 otherwise.
double mu_matsubara(const MaterialSpec& spec, unsigned l);

/// Piecewise permeability on the real axis: mu(0) up to omega_1, Debye
/// relaxation 1 + (mu(0)-1)/(1 - i omega/omega_ch) up to omega_2, then 1.
/// The jumps at omega_1 and omega_2 are kept as is.
std::complex<double> mu_real(const MaterialSpec& spec, double omega);

}  // namespace casimir
