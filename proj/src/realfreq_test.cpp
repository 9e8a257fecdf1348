#include <doctest.h>

#include <cmath>

#include <algorithm>

#include "casimir/realfreq.hpp"
#include "casimir/units.hpp"

using namespace casimir;

namespace {
const NumericsConfig cfg{};
}

TEST_CASE("thermal weight") {
  const EvanescentIntegrand f(Polarization::TM, scenarios::au_au(1e-6), PermittivityModel::Drude);
  CHECK(f.prefactor() < 0.0);
  CHECK(f.thermal_weight(50.0) == doctest::Approx(1.0).epsilon(1e-6));
  // coth(x) ~ 1/x for small x.
  const double t = 1e-8;
  const double x = units::codata2018.hbar * units::codata2018.c * t /
                   (4e-6 * units::codata2018.k_B * 300.0);
  CHECK(f.thermal_weight(t) == doctest::Approx(1.0 / x).epsilon(1e-8));
}

TEST_CASE("s-variable form equals the w-variable form") {
  const EvanescentIntegrand f(Polarization::TE, scenarios::ni_ni(1e-6), PermittivityModel::Drude);
  for (double t : {1e-6, 0.01, 1.0, 7.0})
    for (double w : {1e-3, 0.2, 3.0}) {
      const double s = std::sqrt(w * w + 2 * w * t);
      // (w + t) dw = s ds, so value dw = value_in_s ds
      CHECK(f.value(t, w) == doctest::Approx(f.value_in_s(t, s) * (w + t) / s).epsilon(1e-12));
    }
}

TEST_CASE("integrand vanishes for real permittivity and permeability") {
  const EvanescentIntegrand f(Polarization::TM, scenarios::au_au(1e-6), PermittivityModel::Plasma);
  for (double t : {1e-4, 0.3, 3.0, 30.0})
    for (double w : {1e-3, 0.5, 10.0}) CHECK(f.value(t, w) == 0.0);
}

TEST_CASE("permeability breakpoints") {
  const EvanescentIntegrand f(Polarization::TE, scenarios::au_ni(1e-6), PermittivityModel::Drude);
  const auto b = f.permeability_breakpoints();
  REQUIRE(b.size() >= 2);
  const double wc = units::codata2018.c / 2e-6;
  CHECK(std::find_if(b.begin(), b.end(), [&](double x) {
          return std::abs(x - 2 * units::pi * 1e5 / wc) < 1e-20;
        }) != b.end());
  const EvanescentIntegrand g(Polarization::TE, scenarios::au_au(1e-6), PermittivityModel::Drude);
  CHECK(g.permeability_breakpoints().empty());
}

TEST_CASE("Au-Au plasma fractions are exactly zero") {
  const auto sys = scenarios::au_au(1e-6);
  for (auto pol : {Polarization::TM, Polarization::TE})
    CHECK(force_evanescent(pol, sys, PermittivityModel::Plasma, cfg).value == 0.0);
}

TEST_CASE("Drude breakdown: golden values and identity") {
  const auto fb = force_breakdown(scenarios::au_ni(1e-6), PermittivityModel::Drude, cfg);
  REQUIRE(fb.has_breakdown());
  CHECK(fb.ratio(*fb.F_TM_evan) == doctest::Approx(-42.934).epsilon(1e-4));
  CHECK(fb.ratio(*fb.F_TE_evan) == doctest::Approx(-0.96725).epsilon(1e-4));
  CHECK(*fb.F_TM_evan + *fb.F_TM_prop == doctest::Approx(fb.F_TM).epsilon(1e-15));
  CHECK(*fb.F_TE_evan + *fb.F_TE_prop == doctest::Approx(fb.F_TE).epsilon(1e-15));
  CHECK(*fb.err_TM_evan < 1e-8 * std::abs(*fb.F_TM_evan));
}

TEST_CASE("plate swap leaves the evanescent fraction unchanged") {
  const auto sys = scenarios::au_ni(2e-6);
  for (auto pol : {Polarization::TM, Polarization::TE}) {
    const auto a = force_evanescent(pol, sys, PermittivityModel::Drude, cfg);
    const auto b = force_evanescent(pol, sys.swapped(), PermittivityModel::Drude, cfg);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-8));
  }
}

TEST_CASE("endpoint robustness: halving t_min stays within the error estimate") {
  for (auto make : {scenarios::au_ni, scenarios::ni_ni}) {
    const auto sys = make(1e-6, 300.0);
    NumericsConfig half = cfg;
    half.t_min_cutoff /= 2;
    const auto a = force_evanescent(Polarization::TE, sys, PermittivityModel::Drude, cfg);
    const auto b = force_evanescent(Polarization::TE, sys, PermittivityModel::Drude, half);
    CHECK(std::abs(a.value - b.value) < a.abs_error);
  }
}

TEST_CASE("plasma null certificate over a grid") {
  const auto rep = certify_plasma_null(scenarios::au_au(), standard_null_grid(), cfg);
  CHECK(rep.passed);
  CHECK(rep.entries.size() == 10);
  CHECK(rep.max_ratio < rep.bound);
  CHECK(standard_null_grid().size() == 5);
}
