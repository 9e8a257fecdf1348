#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/matsubara.hpp"

namespace casimir {

/// Invalid configuration value. key() is the dotted JSON path of the
/// offending entry, e.g. "numerics.rel_tol".
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Per-field overrides of a plate's material. Energies in eV, permeability
/// band frequencies in rad/s.
struct MaterialOverride {
  std::optional<std::string> preset;  // "au" or "ni"
  std::optional<double> omega_p_ev;
  std::optional<double> gamma_ev;
  std::optional<double> mu_static;
  std::optional<double> mu_omega1;
  std::optional<double> mu_omega2;
  std::optional<double> mu_omega_ch;

  bool empty() const;
  bool operator==(const MaterialOverride&) const = default;
};

struct SeparationGrid {
  double min_um = 0.5;
  double max_um = 6.0;
  std::size_t count = 23;
  bool logarithmic = true;
  std::vector<double> list_um;  // takes precedence when non-empty

  /// Separations in metres.
  std::vector<double> values() const;
  bool operator==(const SeparationGrid&) const = default;
};

struct FrequencyGrid {
  std::string material = "ni";
  double omega_min = 1e3;
  double omega_max = 1e16;
  std::size_t count = 400;
  bool operator==(const FrequencyGrid&) const = default;
};

enum class ModelSelection { Drude, Plasma, Both };

struct RunConfig {
  std::string scenario = "au-ni";  // au-ni, ni-ni, au-au or custom
  ModelSelection model = ModelSelection::Both;
  double temperature = 300.0;
  SeparationGrid separations;
  bool breakdown = false;
  NumericsConfig numerics;
  std::string output_path;  // empty: stdout
  std::string output_format = "csv";  // csv or json
  MaterialOverride plate1, plate2;
  FrequencyGrid response;

  /// Models selected, Drude first.
  std::vector<PermittivityModel> models() const;
  /// Plates of the scenario with overrides applied, at separation a.
  /// Throws ConfigError.
  PlateSystem plate_system(double a) const;
  /// Checks every field; throws ConfigError naming the first bad key.
  void validate() const;
};

bool operator==(const NumericsConfig& x, const NumericsConfig& y);
bool operator==(const RunConfig& x, const RunConfig& y);

/// Parses a JSON document. Unknown keys and ill-typed values raise
/// ConfigError. Missing keys keep their defaults.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);
/// Serializes every field; parse_run_config(serialize(c)) == c.
std::string serialize_run_config(const RunConfig& cfg);

std::string_view to_string(ModelSelection m);
std::optional<ModelSelection> parse_model_selection(std::string_view text);

}  // namespace casimir
