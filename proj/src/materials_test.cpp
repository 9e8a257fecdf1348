#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "casimir/materials.hpp"
#include "casimir/units.hpp"

using namespace casimir;

namespace {
const double xi1 = units::matsubara_frequency(1, 300.0);
}

TEST_CASE("presets") {
  const auto au = presets::gold();
  const auto ni = presets::nickel();
  CHECK(au.omega_p == doctest::Approx(units::ev_to_angular_frequency(9.0)));
  CHECK(au.gamma == doctest::Approx(units::ev_to_angular_frequency(0.035)));
  CHECK_FALSE(au.magnetic());
  CHECK(ni.omega_p == doctest::Approx(units::ev_to_angular_frequency(4.89)));
  CHECK(ni.gamma == doctest::Approx(units::ev_to_angular_frequency(0.0436)));
  CHECK(ni.mu_static == 110.0);
  CHECK(ni.mu_omega1 == doctest::Approx(2 * units::pi * 1e5));
  CHECK(ni.mu_omega2 == doctest::Approx(6 * units::pi * 1e9));
  CHECK(ni.mu_omega_ch == doctest::Approx(2 * units::pi * 1e7));
  CHECK(presets::by_name("Au")->name == au.name);
  CHECK(presets::by_name("nickel")->mu_static == 110.0);
  CHECK_FALSE(presets::by_name("cu").has_value());
}

TEST_CASE("model names") {
  CHECK(parse_model("Drude") == PermittivityModel::Drude);
  CHECK(parse_model("plasma") == PermittivityModel::Plasma);
  CHECK_FALSE(parse_model("lorentz"));
  CHECK(to_string(PermittivityModel::Plasma) == "plasma");
}

TEST_CASE("validation names the field") {
  auto m = presets::nickel();
  m.omega_p = -1;
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("omega_p"), std::invalid_argument);
  m = presets::nickel();
  m.mu_omega2 = m.mu_omega1 / 2;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m = presets::gold();
  m.mu_static = 0.5;
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("mu_static"), std::invalid_argument);
}

TEST_CASE("imaginary-axis permittivity") {
  const auto au = presets::gold();
  CHECK(eps_imaginary(au, xi1) == doctest::Approx(2526.7564496755138).epsilon(1e-12));
  CHECK(eps_imaginary(au.with_model(PermittivityModel::Plasma), xi1) ==
        doctest::Approx(3070.9902403552403).epsilon(1e-12));
  CHECK_THROWS_AS(eps_imaginary(au, 0.0), std::domain_error);
  // Drude lies below plasma and both decrease towards 1.
  for (double xi = 1e12; xi < 1e18; xi *= 10) {
    const double d = eps_imaginary(au, xi);
    const double p = eps_imaginary(au.with_model(PermittivityModel::Plasma), xi);
    CHECK(d > 1.0);
    CHECK(d < p);
    CHECK(eps_imaginary(au, 10 * xi) < d);
  }
}

TEST_CASE("real-axis permittivity") {
  const auto au = presets::gold();
  const auto e = eps_real(au, 1e13);
  CHECK(e.real() == doctest::Approx(-63862.792666728695).epsilon(1e-11));
  CHECK(e.imag() == doctest::Approx(339591.63474628151).epsilon(1e-11));
  const auto p = eps_real(au.with_model(PermittivityModel::Plasma), 1e13);
  CHECK(p.imag() == 0.0);
  CHECK(p.real() == doctest::Approx(1.0 - std::pow(au.omega_p / 1e13, 2)));
  CHECK_THROWS_AS(eps_real(au, 0.0), std::domain_error);
  // Passivity.
  for (double w = 1e3; w < 1e17; w *= 7) CHECK(eps_real(au, w).imag() > 0.0);
}

TEST_CASE("permeability") {
  const auto ni = presets::nickel();
  CHECK(mu_matsubara(ni, 0) == 110.0);
  CHECK(mu_matsubara(ni, 1) == 1.0);
  CHECK(mu_matsubara(presets::gold(), 0) == 1.0);
  CHECK(mu_real(ni, 1e3) == std::complex<double>(110.0, 0.0));
  CHECK(mu_real(ni, 1e11) == std::complex<double>(1.0, 0.0));
  const double w = 3e8;
  const auto mu = mu_real(ni, w);
  const auto debye = 1.0 + 109.0 / std::complex<double>(1.0, -w / ni.mu_omega_ch);
  CHECK(mu.real() == doctest::Approx(debye.real()));
  CHECK(mu.imag() == doctest::Approx(debye.imag()));
  CHECK(mu.imag() > 0.0);
  CHECK(mu_real(presets::gold(), w) == std::complex<double>(1.0, 0.0));
}
