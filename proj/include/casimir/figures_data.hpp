#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/realfreq.hpp"

namespace casimir {

/// Tabular sweep output: one key column (separation or frequency), an
/// optional text label per row (the permittivity model) and named numeric
/// columns. Empty cells are std::nullopt.
struct SweepTable {
  std::string scenario;
  std::string key_column;
  std::string label_column;  // empty when rows carry no label
  std::vector<std::string> columns;
  struct Row {
    double key = 0.0;
    std::string label;
    std::vector<std::optional<double>> values;
  };
  std::vector<Row> rows;
  std::map<std::string, std::string> metadata;

  std::optional<double> get(std::size_t row, const std::string& column) const;
  /// Appends the rows of another table with identical columns.
  void append(const SweepTable& other);
};

/// Column names of a force sweep, in output order.
const std::vector<std::string>& force_columns();

/// Converts one breakdown into a force-sweep row.
SweepTable::Row to_row(const ForceBreakdown& fb);

/// Separation sweep for one model. Rows come out in grid order; when
/// threads > 1 rows are computed concurrently but the output is unchanged.
/// Throws std::invalid_argument for an empty, unsorted or out-of-range grid
/// (allowed range 0.1 to 100 um).
SweepTable sweep_forces(const PlateSystem& sys_template, PermittivityModel model,
                        const std::vector<double>& a_grid, const NumericsConfig& cfg,
                        bool breakdown, unsigned threads = 1, const std::string& scenario = "");

/// |Re eps_D|, Im eps_D, |eps_p|, Re mu, Im mu on a frequency grid (rad/s).
SweepTable sweep_material_response(const MaterialSpec& spec, const std::vector<double>& omega_grid);

/// count points from lo to hi inclusive, linear or logarithmic.
std::vector<double> make_grid(double lo, double hi, std::size_t count, bool logarithmic);

/// 23 log-spaced separations on [0.5, 6] um, in metres.
std::vector<double> default_separation_grid();
/// 400 log-spaced frequencies on [1e3, 1e16] rad/s.
std::vector<double> default_frequency_grid();

/// Shortest round-trip decimal, independent of the global locale.
std::string format_number(double x);

/// Header plus one line per row, LF line endings.
void write_csv(std::ostream& os, const SweepTable& table);

}  // namespace casimir
