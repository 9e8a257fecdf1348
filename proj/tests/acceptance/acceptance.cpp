// Acceptance gate: one PASS/FAIL line per criterion, exit status = number
// of failed criteria. Usage: casimir_acceptance <path-to-casimir-cli> <scratch-dir>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/brute_force.hpp"
#include "casimir/figures_data.hpp"
#include "casimir/realfreq.hpp"
#include "casimir/reference_limits.hpp"

using namespace casimir;

namespace {

const NumericsConfig cfg{};

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

PlateSystem nonmagnetic(PlateSystem s) {
  s.plate1 = s.plate1.with_mu_static(1.0);
  s.plate2 = s.plate2.with_mu_static(1.0);
  return s;
}

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

std::vector<double> figure_grid() { return default_separation_grid(); }

Outcome classical_limit() {
  const double fref = reference_high_temperature(30e-6, 300.0);
  const double au_ni = force_total(scenarios::au_ni(30e-6), PermittivityModel::Drude, cfg).F_total / fref;
  const double ni_ni = force_total(scenarios::ni_ni(30e-6), PermittivityModel::Drude, cfg).F_total / fref;
  const double expect_ni = 1.0 + reference::polylog3(std::pow(109.0 / 111.0, 2)) / units::zeta3;
  const bool ok = std::abs(au_ni - 1.0) <= 5e-3 && std::abs(ni_ni / expect_ni - 1.0) <= 1e-2;
  return {ok, "Au-Ni ratio " + fmt("%.6f", au_ni) + " (1 +- 0.5%), Ni-Ni ratio " +
                  fmt("%.6f", ni_ni) + " (" + fmt("%.6f", expect_ni) + " +- 1%)"};
}

Outcome plasma_null() {
  std::string detail;
  bool ok = true;
  for (auto [name, make] : {std::pair{"Au-Ni", scenarios::au_ni}, std::pair{"Ni-Ni", scenarios::ni_ni},
                            std::pair{"Au-Au", scenarios::au_au}}) {
    const auto rep = certify_plasma_null(make(1e-6, 300.0), standard_null_grid(), cfg);
    ok = ok && rep.passed;
    detail += std::string(name) + " max " + fmt("%.3g", rep.max_ratio) + "; ";
  }
  return {ok, detail + "bound 1e-6"};
}

Outcome tm_model_independence() {
  double worst = 0;
  for (auto make : {scenarios::au_ni, scenarios::ni_ni})
    for (double a : figure_grid()) {
      const auto sys = make(a, 300.0);
      const double d = force_polarization_matsubara(Polarization::TM, sys, PermittivityModel::Drude, cfg).value;
      const double p = force_polarization_matsubara(Polarization::TM, sys, PermittivityModel::Plasma, cfg).value;
      worst = std::max(worst, rel(d, p));
    }
  return {worst < 1e-2, "max |F_TM(D) - F_TM(p)|/|F_TM(p)| = " + fmt("%.3g", worst) + " (< 1%)"};
}

Outcome mu_independence() {
  double tm = 0, te_evan = 0, te_prop_min = INFINITY;
  for (auto make : {scenarios::au_ni, scenarios::ni_ni})
    for (double a : figure_grid()) {
      const auto sys = make(a, 300.0);
      const auto ref = nonmagnetic(sys);
      for (auto m : {PermittivityModel::Drude, PermittivityModel::Plasma})
        tm = std::max(tm, rel(force_polarization_matsubara(Polarization::TM, sys, m, cfg).value,
                              force_polarization_matsubara(Polarization::TM, ref, m, cfg).value));
      te_evan = std::max(te_evan,
                         rel(force_evanescent(Polarization::TE, sys, PermittivityModel::Drude, cfg).value,
                             force_evanescent(Polarization::TE, ref, PermittivityModel::Drude, cfg).value));
    }
  for (double a : figure_grid()) {
    const auto sys = scenarios::ni_ni(a, 300.0);
    te_prop_min = std::min(
        te_prop_min,
        rel(force_propagating(Polarization::TE, sys, PermittivityModel::Plasma, cfg).value,
            force_propagating(Polarization::TE, nonmagnetic(sys), PermittivityModel::Plasma, cfg).value));
  }
  const bool ok = tm < 1e-3 && te_evan < 1e-3 && te_prop_min > 5e-2;
  return {ok, "F_TM change " + fmt("%.3g", tm) + " (< 1e-3); F_TE_evan(D) change " +
                  fmt("%.3g", te_evan) + " (< 1e-3); min Ni-Ni F_TE_prop(p) change " +
                  fmt("%.3g", te_prop_min) + " (> 5e-2)"};
}

Outcome sign_structure() {
  struct Fig {
    const char* name;
    PlateSystem (*make)(double, double);
    Polarization pol;
  };
  const Fig figs[] = {{"5", scenarios::au_ni, Polarization::TM}, {"6", scenarios::ni_ni, Polarization::TM},
                      {"7", scenarios::au_au, Polarization::TM}, {"8", scenarios::au_ni, Polarization::TE},
                      {"9", scenarios::ni_ni, Polarization::TE}};
  std::string failed;
  for (const auto& f : figs) {
    int bad = 0;
    double first_bad = 0;
    for (double a : figure_grid()) {
      const auto fb = force_breakdown(f.make(a, 300.0), PermittivityModel::Drude, cfg);
      const bool tm = f.pol == Polarization::TM;
      const double evan = tm ? *fb.F_TM_evan : *fb.F_TE_evan;
      const double prop = tm ? *fb.F_TM_prop : *fb.F_TE_prop;
      const bool ok = evan > 0 && prop < 0 && std::abs(prop) > std::abs(evan) && fb.F_TM < 0 &&
                      fb.F_TE < 0 && fb.F_total < 0;
      if (!ok && bad++ == 0) first_bad = a;
    }
    if (bad)
      failed += std::string(" fig ") + f.name + ": " + std::to_string(bad) + " points from a = " +
                fmt("%.3g", first_bad * 1e6) + " um;";
  }
  return {failed.empty(), failed.empty() ? "all 5 figures, 23 separations" : "violations:" + failed};
}

Outcome ideal_metal() {
  PlateSystem sys = scenarios::au_au(0.5e-6, 1.0);
  sys.plate1.omega_p *= 100;
  sys.plate2.omega_p *= 100;
  const double f = force_total(sys, PermittivityModel::Plasma, cfg).F_total;
  const double d = rel(f, reference::ideal_metal_zero_T(0.5e-6));
  return {d < 1e-2, "relative deviation " + fmt("%.3g", d) + " (< 1%)"};
}

Outcome oracle_equivalence() {
  double worst_m = 0, worst_e = 0;
  for (auto make : {scenarios::au_ni, scenarios::ni_ni})
    for (auto model : {PermittivityModel::Drude, PermittivityModel::Plasma})
      for (unsigned l = 0; l <= 3; ++l)
        for (bool tm : {true, false}) {
          const auto sys = make(1e-6, 300.0);
          const bool d = model == PermittivityModel::Drude;
          const double bf = oracle::matsubara_inner(tm, oracle::plate(sys.plate1, d),
                                                    oracle::plate(sys.plate2, d), sys.a, sys.T, l, 1000000);
          const double v =
              matsubara_inner_integral(tm ? Polarization::TM : Polarization::TE, sys, model, l, cfg).value;
          if (bf != 0.0 || v != 0.0) worst_m = std::max(worst_m, rel(v, bf));
        }
  for (auto make : {scenarios::au_ni, scenarios::ni_ni})
    for (double a : {1e-6, 3e-6})
      for (bool tm : {true, false}) {
        const auto sys = make(a, 300.0);
        const double bf = oracle::evanescent(tm, oracle::plate(sys.plate1, true),
                                             oracle::plate(sys.plate2, true), a, 300.0, cfg, {});
        const double v =
            force_evanescent(tm ? Polarization::TM : Polarization::TE, sys, PermittivityModel::Drude, cfg).value;
        worst_e = std::max(worst_e, rel(v, bf));
      }
  return {worst_m < 1e-6 && worst_e < 1e-4, "Matsubara inner " + fmt("%.3g", worst_m) +
                                                " (< 1e-6); evanescent " + fmt("%.3g", worst_e) + " (< 1e-4)"};
}

struct Reported {
  std::vector<double> value, error;
};

Reported reported(const PlateSystem& sys, PermittivityModel m, const NumericsConfig& c) {
  const auto fb = force_breakdown(sys, m, c);
  const double e_tm = fb.err_TM, e_te = fb.err_TE, e_tme = *fb.err_TM_evan, e_tee = *fb.err_TE_evan;
  return {{fb.F_total, fb.F_TM, fb.F_TE, *fb.F_TM_evan, *fb.F_TM_prop, *fb.F_TE_evan, *fb.F_TE_prop},
          {e_tm + e_te, e_tm, e_te, e_tme, e_tm + e_tme, e_tee, e_te + e_tee}};
}

Outcome convergence() {
  struct Change {
    const char* name;
    std::function<void(NumericsConfig&)> apply;
  };
  const Change changes[] = {
      {"rel_tol/2", [](NumericsConfig& c) { c.rel_tol /= 2; c.matsubara_tail_tol = std::min(c.matsubara_tail_tol, c.rel_tol); }},
      {"t_min/2", [](NumericsConfig& c) { c.t_min_cutoff /= 2; }},
      {"T_max*2", [](NumericsConfig& c) { c.t_max *= 2; }},
      {"W_max*2", [](NumericsConfig& c) { c.w_max *= 2; }}};
  std::string detail;
  bool ok = true;
  for (const auto& ch : changes) {
    double worst = 0;
    for (auto make : {scenarios::au_ni, scenarios::ni_ni, scenarios::au_au})
      for (auto m : {PermittivityModel::Drude, PermittivityModel::Plasma}) {
        const auto sys = make(1e-6, 300.0);
        NumericsConfig c2 = cfg;
        ch.apply(c2);
        const auto base = reported(sys, m, cfg), next = reported(sys, m, c2);
        for (std::size_t i = 0; i < base.value.size(); ++i) {
          const double d = std::abs(next.value[i] - base.value[i]);
          if (d == 0.0) continue;
          worst = std::max(worst, base.error[i] > 0 ? d / base.error[i] : INFINITY);
        }
      }
    ok = ok && worst < 1.0;
    detail += std::string(ch.name) + " " + fmt("%.3g", worst) + "; ";
  }
  return {ok, detail + "(max |change|/error estimate, < 1)"};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::string& cli, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string a = dir + "/figure1_run1.csv", b = dir + "/figure1_run2.csv";
  for (const auto& out : {a, b}) {
    const std::string cmd = "\"" + cli + "\" sweep --scenario au-ni --model both -o \"" + out + "\"";
    if (std::system(cmd.c_str()) != 0) return {false, "sweep command failed"};
  }
  const std::string x = slurp(a), y = slurp(b);
  const auto lines = std::count(x.begin(), x.end(), '\n');
  return {!x.empty() && x == y && lines == 47,
          std::to_string(lines - 1) + " data rows, " + (x == y ? "byte-identical" : "outputs differ")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <casimir-cli> <scratch-dir>\n", argv[0]);
    return 2;
  }
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::string cli = argv[1], dir = argv[2];
  const Criterion criteria[] = {
      {"classical-limit oracle", classical_limit},
      {"plasma evanescent null", plasma_null},
      {"TM model independence", tm_model_independence},
      {"mu independence", mu_independence},
      {"Drude sign structure", sign_structure},
      {"ideal-metal limit", ideal_metal},
      {"oracle equivalence", oracle_equivalence},
      {"convergence robustness", convergence},
      {"determinism", [&] { return determinism(cli, dir); }},
  };
  int failed = 0, i = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.passed;
    std::printf("%s %d %s: %s\n", o.passed ? "PASS" : "FAIL", ++i, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", i - failed, i);
  return failed;
}
