#include "casimir/materials.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "casimir/units.hpp"

namespace casimir {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

}  // namespace

std::string_view to_string(PermittivityModel model) {
  return model == PermittivityModel::Drude ? "drude" : "plasma";
}

std::optional<PermittivityModel> parse_model(std::string_view text) {
  const auto lower = lowercase(text);
  if (lower == "drude") return PermittivityModel::Drude;
  if (lower == "plasma") return PermittivityModel::Plasma;
  return std::nullopt;
}

void MaterialSpec::validate() const {
  if (!(omega_p > 0.0))
    throw std::invalid_argument(name + ": omega_p must be positive");
  if (!(gamma >= 0.0))
    throw std::invalid_argument(name + ": gamma must be non-negative");
  if (!(mu_static >= 1.0))
    throw std::invalid_argument(name + ": mu_static must be >= 1");
  if (magnetic() &&
      !(0.0 < mu_omega1 && mu_omega1 < mu_omega_ch && mu_omega_ch < mu_omega2))
    throw std::invalid_argument(
        name + ": permeability band requires 0 < mu_omega1 < mu_omega_ch < mu_omega2");
}

MaterialSpec MaterialSpec::with_model(PermittivityModel model) const {
  MaterialSpec copy = *this;
  copy.eps_model = model;
  return copy;
}

MaterialSpec MaterialSpec::with_mu_static(double mu0) const {
  MaterialSpec copy = *this;
  copy.mu_static = mu0;
  return copy;
}

namespace presets {

MaterialSpec gold() {
  MaterialSpec m;
  m.name = "Au";
  m.omega_p = units::ev_to_angular_frequency(9.0);
  m.gamma = units::ev_to_angular_frequency(0.035);
  return m;
}

MaterialSpec nickel() {
  MaterialSpec m;
  m.name = "Ni";
  m.omega_p = units::ev_to_angular_frequency(4.89);
  m.gamma = units::ev_to_angular_frequency(0.0436);
  m.mu_static = 110.0;
  m.mu_omega1 = 2.0 * units::pi * 1e5;
  m.mu_omega2 = 6.0 * units::pi * 1e9;
  m.mu_omega_ch = 2.0 * units::pi * 1e7;
  return m;
}

std::optional<MaterialSpec> by_name(std::string_view name) {
  const auto lower = lowercase(name);
  if (lower == "au" || lower == "gold") return gold();
  if (lower == "ni" || lower == "nickel") return nickel();
  return std::nullopt;
}

}  // namespace presets

double eps_imaginary(const MaterialSpec& spec, double xi) {
  if (!(xi > 0.0))
    throw std::domain_error(
        "eps_imaginary: xi must be positive (use the zero-frequency reflection limits)");
  const double wp2 = spec.omega_p * spec.omega_p;
  if (spec.eps_model == PermittivityModel::Drude)
    return 1.0 + wp2 / (xi * (xi + spec.gamma));
  return 1.0 + wp2 / (xi * xi);
}

std::complex<double> eps_real(const MaterialSpec& spec, double omega) {
  if (!(omega > 0.0))
    throw std::domain_error("eps_real: omega must be positive");
  const double wp2 = spec.omega_p * spec.omega_p;
  if (spec.eps_model == PermittivityModel::Plasma)
    return {1.0 - wp2 / (omega * omega), 0.0};
  // 1 - wp^2/(w(w + i g)) split into parts to keep Im exact.
  const double denom = omega * (omega * omega + spec.gamma * spec.gamma);
  return {1.0 - wp2 * omega / denom, wp2 * spec.gamma / denom};
}

double mu_matsubara(const MaterialSpec& spec, unsigned l) {
  return l == 0 ? spec.mu_static : 1.0;
}

std::complex<double> mu_real(const MaterialSpec& spec, double omega) {
  if (!spec.magnetic()) return {1.0, 0.0};
  if (omega <= spec.mu_omega1) return {spec.mu_static, 0.0};
  if (omega > spec.mu_omega2) return {1.0, 0.0};
  const std::complex<double> relax(1.0, -omega / spec.mu_omega_ch);
  return 1.0 + (spec.mu_static - 1.0) / relax;
}

}  // namespace casimir
