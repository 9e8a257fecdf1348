#include "validation.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "casimir/realfreq.hpp"
#include "casimir/reference_limits.hpp"

namespace casimir::cli {

namespace {

bool selected(const std::vector<std::string>& filter, const std::string& name) {
  return filter.empty() || std::find(filter.begin(), filter.end(), name) != filter.end();
}

CheckResult make(std::string name, std::string scenario, double measured, double bound,
                 std::string detail = "") {
  return {std::move(name), std::move(scenario), measured, bound,
          std::isfinite(measured) && measured < bound, std::move(detail)};
}

double rel_change(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

// Drude total at 30 um against the sum of the l = 0 closed forms.
CheckResult classical_limit_check(const std::string& scen, const ValidationOptions& opt) {
  const PlateSystem sys = scenario_system(scen, 30e-6, opt.temperature);
  const auto fb = force_total(sys, PermittivityModel::Drude, opt.numerics);
  const double expected =
      reference::classical_limit(Polarization::TM, sys, PermittivityModel::Drude,
                                 opt.oracle_constants).value +
      reference::classical_limit(Polarization::TE, sys, PermittivityModel::Drude,
                                 opt.oracle_constants).value;
  const double bound = scen == "au-ni" ? 5e-3 : 1e-2;
  return make("classical-limit", scen, rel_change(fb.F_total, expected), bound,
              "a = 30 um, Drude, relative deviation from the l = 0 closed form");
}

// Plasma model with omega_p x100 at 1 K, a = 0.5 um.
CheckResult ideal_metal_check(const ValidationOptions& opt) {
  PlateSystem sys = scenarios::au_au(0.5e-6, 1.0);
  sys.plate1.omega_p *= 100.0;
  sys.plate2.omega_p *= 100.0;
  const auto fb = force_total(sys, PermittivityModel::Plasma, opt.numerics);
  const double expected = reference::ideal_metal_zero_T(sys.a, opt.oracle_constants);
  return make("ideal-metal", "au-au", rel_change(fb.F_total, expected), 1e-2,
              "plasma, omega_p x100, T = 1 K, a = 0.5 um");
}

CheckResult plasma_null_check(const std::string& scen, const ValidationOptions& opt) {
  const PlateSystem sys = scenario_system(scen, 1e-6, opt.temperature);
  const auto rep = certify_plasma_null(sys, standard_null_grid(), opt.numerics);
  return make("plasma-null", scen, rep.max_ratio, rep.bound,
              "max |F_evan(plasma)|/|F_ref| over {0.5, 1, 2, 4, 6} um, TM and TE");
}

std::vector<CheckResult> mu_independence_checks(const std::string& scen,
                                                const ValidationOptions& opt) {
  double worst_tm = 0.0, worst_te_evan = 0.0;
  for (double a : standard_null_grid()) {
    const PlateSystem sys = scenario_system(scen, a, opt.temperature);
    PlateSystem nonmag = sys;
    nonmag.plate1 = nonmag.plate1.with_mu_static(1.0);
    nonmag.plate2 = nonmag.plate2.with_mu_static(1.0);
    for (auto model : {PermittivityModel::Drude, PermittivityModel::Plasma}) {
      const auto f = force_polarization_matsubara(Polarization::TM, sys, model, opt.numerics);
      const auto g = force_polarization_matsubara(Polarization::TM, nonmag, model, opt.numerics);
      worst_tm = std::max(worst_tm, rel_change(f.value, g.value));
    }
    const auto e = force_evanescent(Polarization::TE, sys, PermittivityModel::Drude, opt.numerics);
    const auto e0 =
        force_evanescent(Polarization::TE, nonmag, PermittivityModel::Drude, opt.numerics);
    worst_te_evan = std::max(worst_te_evan, rel_change(e.value, e0.value));
  }
  return {make("mu-independence/TM", scen, worst_tm, 1e-3,
               "max relative change of F_TM when mu(0) -> 1, both models"),
          make("mu-independence/TE-evan", scen, worst_te_evan, 1e-3,
               "max relative change of F_TE_evan(Drude) when mu(0) -> 1")};
}

struct Snapshot {
  double values[4];
  double errors[4];
};

Snapshot snapshot(const PlateSystem& sys, const NumericsConfig& cfg) {
  const auto fb = force_breakdown(sys, PermittivityModel::Drude, cfg);
  return {{fb.F_TM, fb.F_TE, *fb.F_TM_evan, *fb.F_TE_evan},
          {fb.err_TM, fb.err_TE, *fb.err_TM_evan, *fb.err_TE_evan}};
}

// Each perturbation must move every force by less than the error estimate
// of the unperturbed run; measured is the worst ratio of the two.
std::vector<CheckResult> convergence_checks(const std::string& scen, const ValidationOptions& opt) {
  const PlateSystem sys = scenario_system(scen, 1e-6, opt.temperature);
  const Snapshot base = snapshot(sys, opt.numerics);
  auto compare = [&](const char* name, NumericsConfig cfg) {
    const Snapshot s = snapshot(sys, cfg);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(s.values[i] - base.values[i]) / base.errors[i]);
    return make(name, scen, worst, 1.0, "a = 1 um, Drude, |change|/(prior error estimate)");
  };
  NumericsConfig half_tol = opt.numerics;
  half_tol.rel_tol *= 0.5;
  half_tol.matsubara_tail_tol = std::min(half_tol.matsubara_tail_tol, half_tol.rel_tol);
  NumericsConfig half_tmin = opt.numerics;
  half_tmin.t_min_cutoff *= 0.5;
  NumericsConfig double_wmax = opt.numerics;
  double_wmax.w_max *= 2.0;
  return {compare("convergence/rel_tol", half_tol), compare("convergence/t_min", half_tmin),
          compare("convergence/w_max", double_wmax)};
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"plasma-null", "classical-limit", "ideal-metal",
                                                 "mu-independence", "convergence"};
  return names;
}

const std::vector<std::string>& known_scenarios() {
  static const std::vector<std::string> names = {"au-ni", "ni-ni", "au-au"};
  return names;
}

PlateSystem scenario_system(const std::string& name, double a, double T) {
  if (name == "au-ni") return scenarios::au_ni(a, T);
  if (name == "ni-ni") return scenarios::ni_ni(a, T);
  if (name == "au-au") return scenarios::au_au(a, T);
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::vector<CheckResult> run_validation(const ValidationOptions& opt) {
  const auto& scens = opt.scenarios.empty() ? known_scenarios() : opt.scenarios;
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };

  for (const auto& s : scens) {
    if (selected(opt.checks, "plasma-null")) out.push_back(plasma_null_check(s, opt));
    if (selected(opt.checks, "classical-limit"))
      out.push_back(classical_limit_check(s, opt));
    if (selected(opt.checks, "mu-independence") && s != "au-au")
      append(mu_independence_checks(s, opt));
    if (selected(opt.checks, "convergence")) append(convergence_checks(s, opt));
  }
  // Scenario independent.
  if (selected(opt.checks, "ideal-metal") && selected(opt.scenarios, "au-au"))
    out.push_back(ideal_metal_check(opt));
  return out;
}

std::string validation_report_json(const std::vector<CheckResult>& results) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["passed"] = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  j["checks"] = nlohmann::json::array();
  for (const auto& r : results) {
    j["checks"].push_back({{"name", r.name},
                           {"scenario", r.scenario},
                           {"measured", r.measured},
                           {"bound", r.bound},
                           {"passed", r.passed},
                           {"detail", r.detail}});
  }
  return j.dump(2) + "\n";
}

}  // namespace casimir::cli
