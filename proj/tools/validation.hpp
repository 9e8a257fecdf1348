#pragma once

#include <string>
#include <vector>

#include "casimir/matsubara.hpp"
#include "casimir/units.hpp"

namespace casimir::cli {

struct CheckResult {
  std::string name;
  std::string scenario;
  double measured = 0.0;
  double bound = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidationOptions {
  std::vector<std::string> checks;     // empty: all
  std::vector<std::string> scenarios;  // empty: au-ni, ni-ni, au-au
  NumericsConfig numerics;
  double temperature = 300.0;
  // Constants handed to the closed-form oracles. Differs from CODATA only
  // when a test perturbs it on purpose.
  units::PhysicalConstants oracle_constants = units::codata2018;
};

const std::vector<std::string>& known_checks();
const std::vector<std::string>& known_scenarios();

PlateSystem scenario_system(const std::string& name, double a, double T);

std::vector<CheckResult> run_validation(const ValidationOptions& opt);

/// JSON report, schema_version 1.
std::string validation_report_json(const std::vector<CheckResult>& results);

}  // namespace casimir::cli
