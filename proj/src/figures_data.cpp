#include "casimir/figures_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "casimir/units.hpp"

namespace casimir {

std::optional<double> SweepTable::get(std::size_t row, const std::string& column) const {
  const auto it = std::find(columns.begin(), columns.end(), column);
  if (it == columns.end()) throw std::out_of_range("no column " + column);
  return rows.at(row).values.at(static_cast<std::size_t>(it - columns.begin()));
}

void SweepTable::append(const SweepTable& other) {
  if (other.columns != columns || other.key_column != key_column)
    throw std::invalid_argument("append: column layout differs");
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

const std::vector<std::string>& force_columns() {
  static const std::vector<std::string> cols = {
      "F_total_Pa",    "F_TM_Pa",       "F_TE_Pa",       "F_TM_evan_Pa",  "F_TM_prop_Pa",
      "F_TE_evan_Pa",  "F_TE_prop_Pa",  "F_ref_Pa",      "ratio_total",   "ratio_TM",
      "ratio_TE",      "ratio_TM_evan", "ratio_TM_prop", "ratio_TE_evan", "ratio_TE_prop"};
  return cols;
}

SweepTable::Row to_row(const ForceBreakdown& fb) {
  auto ratio = [&](const std::optional<double>& f) -> std::optional<double> {
    if (!f) return std::nullopt;
    return fb.ratio(*f);
  };
  SweepTable::Row row;
  row.key = fb.a / units::micrometre;
  row.label = std::string(to_string(fb.model));
  row.values = {fb.F_total,          fb.F_TM,           fb.F_TE,           fb.F_TM_evan,
                fb.F_TM_prop,        fb.F_TE_evan,      fb.F_TE_prop,      fb.F_ref,
                fb.ratio_total(),    fb.ratio_TM(),     fb.ratio_TE(),     ratio(fb.F_TM_evan),
                ratio(fb.F_TM_prop), ratio(fb.F_TE_evan), ratio(fb.F_TE_prop)};
  return row;
}

SweepTable sweep_forces(const PlateSystem& sys_template, PermittivityModel model,
                        const std::vector<double>& a_grid, const NumericsConfig& cfg,
                        bool breakdown, unsigned threads, const std::string& scenario) {
  if (a_grid.empty()) throw std::invalid_argument("separation grid is empty");
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    const double a = a_grid[i];
    if (!(a >= 0.1e-6 && a <= 100e-6))
      throw std::invalid_argument("separation outside [0.1, 100] um");
    if (i > 0 && !(a > a_grid[i - 1]))
      throw std::invalid_argument("separation grid must be strictly increasing");
  }

  auto compute = [&](double a) {
    const PlateSystem sys = sys_template.with_separation(a);
    return breakdown ? force_breakdown(sys, model, cfg) : force_total(sys, model, cfg);
  };

  std::vector<ForceBreakdown> results(a_grid.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < a_grid.size(); ++i) results[i] = compute(a_grid[i]);
  } else {
    // Strided partition; each row is independent and lands in its own slot.
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < threads; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < a_grid.size(); i += threads) results[i] = compute(a_grid[i]);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  SweepTable table;
  table.scenario = scenario;
  table.key_column = "a_um";
  table.label_column = "model";
  table.columns = force_columns();
  for (const auto& fb : results) table.rows.push_back(to_row(fb));
  table.metadata["model"] = std::string(to_string(model));
  table.metadata["temperature_K"] = format_number(sys_template.T);
  table.metadata["constants"] = "CODATA2018";
  table.metadata["rel_tol"] = format_number(cfg.rel_tol);
  table.metadata["matsubara_tail_tol"] = format_number(cfg.matsubara_tail_tol);
  table.metadata["l_max_cap"] = std::to_string(cfg.l_max_cap);
  table.metadata["t_min_cutoff"] = format_number(cfg.t_min_cutoff);
  table.metadata["t_max"] = format_number(cfg.t_max);
  table.metadata["w_max"] = format_number(cfg.w_max);
  table.metadata["breakdown"] = breakdown ? "true" : "false";
  return table;
}

SweepTable sweep_material_response(const MaterialSpec& spec, const std::vector<double>& omega_grid) {
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    if (!(omega_grid[i] > 0.0)) throw std::invalid_argument("frequencies must be positive");
    if (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))
      throw std::invalid_argument("frequency grid must be strictly increasing");
  }
  const MaterialSpec drude = spec.with_model(PermittivityModel::Drude);
  const MaterialSpec plasma = spec.with_model(PermittivityModel::Plasma);
  SweepTable table;
  table.scenario = spec.name;
  table.key_column = "omega_rad_s";
  table.columns = {"abs_re_eps_drude", "im_eps_drude", "abs_eps_plasma", "re_mu", "im_mu"};
  for (double omega : omega_grid) {
    const auto ed = eps_real(drude, omega);
    const auto ep = eps_real(plasma, omega);
    const auto mu = mu_real(spec, omega);
    table.rows.push_back(
        {omega, "", {std::abs(ed.real()), ed.imag(), std::abs(ep.real()), mu.real(), mu.imag()}});
  }
  table.metadata["material"] = spec.name;
  table.metadata["constants"] = "CODATA2018";
  return table;
}

std::vector<double> make_grid(double lo, double hi, std::size_t count, bool logarithmic) {
  if (count == 0) throw std::invalid_argument("grid count must be positive");
  if (count == 1) return {lo};
  if (!(hi > lo)) throw std::invalid_argument("grid maximum must exceed minimum");
  if (logarithmic && !(lo > 0.0)) throw std::invalid_argument("log grid needs positive bounds");
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    grid[i] = logarithmic ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> default_separation_grid() {
  return make_grid(0.5e-6, 6e-6, 23, true);
}

std::vector<double> default_frequency_grid() { return make_grid(1e3, 1e16, 400, true); }

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const SweepTable& table) {
  os << table.key_column;
  if (!table.label_column.empty()) os << ',' << table.label_column;
  for (const auto& c : table.columns) os << ',' << c;
  os << '\n';
  for (const auto& row : table.rows) {
    os << format_number(row.key);
    if (!table.label_column.empty()) os << ',' << row.label;
    for (const auto& v : row.values) {
      os << ',';
      if (v) os << format_number(*v);
    }
    os << '\n';
  }
}

}  // namespace casimir
