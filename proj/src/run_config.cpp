#include "casimir/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "casimir/figures_data.hpp"
#include "casimir/units.hpp"

namespace casimir {

using nlohmann::json;

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* a) { return key == a; });
    if (!known) throw ConfigError(join(prefix, key), "unknown key");
  }
}

const json* child_object(const json& obj, const std::string& prefix, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return nullptr;
  if (!it->is_object()) throw ConfigError(join(prefix, key), "expected an object");
  return &*it;
}

template <class T>
void read(const json& obj, const std::string& prefix, const char* key, T& out) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  const std::string path = join(prefix, key);
  if constexpr (std::is_same_v<T, bool>) {
    if (!it->is_boolean()) throw ConfigError(path, "expected true or false");
    out = it->get<bool>();
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!it->is_string()) throw ConfigError(path, "expected a string");
    out = it->get<std::string>();
  } else if constexpr (std::is_floating_point_v<T>) {
    if (!it->is_number()) throw ConfigError(path, "expected a number");
    out = it->get<double>();
  } else {
    if (!it->is_number_unsigned()) throw ConfigError(path, "expected a non-negative integer");
    out = it->get<T>();
  }
}

template <class T>
void read(const json& obj, const std::string& prefix, const char* key, std::optional<T>& out) {
  if (!obj.contains(key)) return;
  T value{};
  read(obj, prefix, key, value);
  out = value;
}

MaterialOverride parse_material(const json& j, const std::string& prefix) {
  reject_unknown(j, prefix,
                 {"preset", "omega_p_ev", "gamma_ev", "mu_static", "mu_omega1", "mu_omega2",
                  "mu_omega_ch"});
  MaterialOverride m;
  read(j, prefix, "preset", m.preset);
  read(j, prefix, "omega_p_ev", m.omega_p_ev);
  read(j, prefix, "gamma_ev", m.gamma_ev);
  read(j, prefix, "mu_static", m.mu_static);
  read(j, prefix, "mu_omega1", m.mu_omega1);
  read(j, prefix, "mu_omega2", m.mu_omega2);
  read(j, prefix, "mu_omega_ch", m.mu_omega_ch);
  return m;
}

json material_to_json(const MaterialOverride& m) {
  json j = json::object();
  if (m.preset) j["preset"] = *m.preset;
  if (m.omega_p_ev) j["omega_p_ev"] = *m.omega_p_ev;
  if (m.gamma_ev) j["gamma_ev"] = *m.gamma_ev;
  if (m.mu_static) j["mu_static"] = *m.mu_static;
  if (m.mu_omega1) j["mu_omega1"] = *m.mu_omega1;
  if (m.mu_omega2) j["mu_omega2"] = *m.mu_omega2;
  if (m.mu_omega_ch) j["mu_omega_ch"] = *m.mu_omega_ch;
  return j;
}

MaterialSpec resolve_material(const MaterialSpec* base, const MaterialOverride& m,
                              const std::string& key) {
  MaterialSpec spec;
  if (m.preset) {
    const auto p = presets::by_name(*m.preset);
    if (!p) throw ConfigError(key + ".preset", "unknown material '" + *m.preset + "'");
    spec = *p;
  } else if (base) {
    spec = *base;
  } else {
    spec.name = "custom";
    if (!m.omega_p_ev) throw ConfigError(key + ".omega_p_ev", "required for a custom plate");
    if (!m.gamma_ev) throw ConfigError(key + ".gamma_ev", "required for a custom plate");
  }
  try {
    if (m.omega_p_ev) spec.omega_p = units::ev_to_angular_frequency(*m.omega_p_ev);
  } catch (const std::domain_error&) {
    throw ConfigError(key + ".omega_p_ev", "must be positive");
  }
  try {
    if (m.gamma_ev) spec.gamma = units::ev_to_angular_frequency(*m.gamma_ev);
  } catch (const std::domain_error&) {
    throw ConfigError(key + ".gamma_ev", "must not be negative");
  }
  if (m.mu_static) spec.mu_static = *m.mu_static;
  if (m.mu_omega1) spec.mu_omega1 = *m.mu_omega1;
  if (m.mu_omega2) spec.mu_omega2 = *m.mu_omega2;
  if (m.mu_omega_ch) spec.mu_omega_ch = *m.mu_omega_ch;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(key, e.what());
  }
  return spec;
}

}  // namespace

bool MaterialOverride::empty() const { return *this == MaterialOverride{}; }

std::vector<double> SeparationGrid::values() const {
  std::vector<double> out;
  if (!list_um.empty()) {
    for (double a : list_um) out.push_back(a * units::micrometre);
    return out;
  }
  for (double a : make_grid(min_um, max_um, count, logarithmic)) out.push_back(a * units::micrometre);
  return out;
}

std::string_view to_string(ModelSelection m) {
  switch (m) {
    case ModelSelection::Drude: return "drude";
    case ModelSelection::Plasma: return "plasma";
    case ModelSelection::Both: return "both";
  }
  return "both";
}

std::optional<ModelSelection> parse_model_selection(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "drude") return ModelSelection::Drude;
  if (s == "plasma") return ModelSelection::Plasma;
  if (s == "both") return ModelSelection::Both;
  return std::nullopt;
}

std::vector<PermittivityModel> RunConfig::models() const {
  switch (model) {
    case ModelSelection::Drude: return {PermittivityModel::Drude};
    case ModelSelection::Plasma: return {PermittivityModel::Plasma};
    case ModelSelection::Both: break;
  }
  return {PermittivityModel::Drude, PermittivityModel::Plasma};
}

PlateSystem RunConfig::plate_system(double a) const {
  std::optional<PlateSystem> base;
  if (scenario == "au-ni") base = scenarios::au_ni(a, temperature);
  else if (scenario == "ni-ni") base = scenarios::ni_ni(a, temperature);
  else if (scenario == "au-au") base = scenarios::au_au(a, temperature);
  else if (scenario != "custom") throw ConfigError("scenario", "unknown scenario '" + scenario + "'");

  PlateSystem sys;
  sys.plate1 = resolve_material(base ? &base->plate1 : nullptr, plate1, "materials.plate1");
  sys.plate2 = resolve_material(base ? &base->plate2 : nullptr, plate2, "materials.plate2");
  sys.a = a;
  sys.T = temperature;
  return sys;
}

void RunConfig::validate() const {
  if (!(temperature > 0.0)) throw ConfigError("temperature", "must be positive");
  if (separations.list_um.empty()) {
    if (separations.count == 0) throw ConfigError("separations.count", "must be positive");
    if (!(separations.min_um > 0.0)) throw ConfigError("separations.min_um", "must be positive");
    if (separations.count > 1 && !(separations.max_um > separations.min_um))
      throw ConfigError("separations.max_um", "must exceed separations.min_um");
  }
  for (double a : separations.values())
    if (!(a >= 0.1e-6 && a <= 100e-6))
      throw ConfigError("separations", "separations must lie in [0.1, 100] um");
  const auto v = separations.values();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) throw ConfigError("separations.list_um", "must be strictly increasing");
  if (output_format != "csv" && output_format != "json")
    throw ConfigError("output.format", "expected csv or json");
  if (!(response.omega_min > 0.0)) throw ConfigError("response.omega_min", "must be positive");
  if (!(response.omega_max > response.omega_min))
    throw ConfigError("response.omega_max", "must exceed response.omega_min");
  if (response.count < 2) throw ConfigError("response.count", "must be at least 2");
  if (!presets::by_name(response.material))
    throw ConfigError("response.material", "unknown material '" + response.material + "'");
  try {
    numerics.validate();
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    throw ConfigError("numerics." + msg.substr(0, msg.find(' ')), msg);
  }
  plate_system(separations.values().front());
}

bool operator==(const NumericsConfig& x, const NumericsConfig& y) {
  return x.rel_tol == y.rel_tol && x.matsubara_tail_tol == y.matsubara_tail_tol &&
         x.l_max_cap == y.l_max_cap && x.inner_quadrature == y.inner_quadrature &&
         x.t_min_cutoff == y.t_min_cutoff && x.t_max == y.t_max && x.w_max == y.w_max &&
         x.max_panels == y.max_panels;
}

bool operator==(const RunConfig& x, const RunConfig& y) {
  return x.scenario == y.scenario && x.model == y.model && x.temperature == y.temperature &&
         x.separations == y.separations && x.breakdown == y.breakdown &&
         x.numerics == y.numerics && x.output_path == y.output_path &&
         x.output_format == y.output_format && x.plate1 == y.plate1 && x.plate2 == y.plate2 &&
         x.response == y.response;
}

RunConfig parse_run_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("<document>", "expected a JSON object");
  reject_unknown(root, "",
                 {"scenario", "model", "temperature", "separations", "breakdown", "numerics",
                  "output", "materials", "response"});

  RunConfig cfg;
  read(root, "", "scenario", cfg.scenario);
  if (root.contains("model")) {
    std::string m;
    read(root, "", "model", m);
    const auto sel = parse_model_selection(m);
    if (!sel) throw ConfigError("model", "expected drude, plasma or both");
    cfg.model = *sel;
  }
  read(root, "", "temperature", cfg.temperature);
  read(root, "", "breakdown", cfg.breakdown);

  if (const json* s = child_object(root, "", "separations")) {
    reject_unknown(*s, "separations", {"min_um", "max_um", "count", "spacing", "list_um"});
    read(*s, "separations", "min_um", cfg.separations.min_um);
    read(*s, "separations", "max_um", cfg.separations.max_um);
    read(*s, "separations", "count", cfg.separations.count);
    if (s->contains("spacing")) {
      std::string spacing;
      read(*s, "separations", "spacing", spacing);
      if (spacing != "log" && spacing != "linear")
        throw ConfigError("separations.spacing", "expected log or linear");
      cfg.separations.logarithmic = spacing == "log";
    }
    if (const auto it = s->find("list_um"); it != s->end()) {
      if (!it->is_array()) throw ConfigError("separations.list_um", "expected an array");
      for (const auto& v : *it) {
        if (!v.is_number()) throw ConfigError("separations.list_um", "expected numbers");
        cfg.separations.list_um.push_back(v.get<double>());
      }
    }
  }

  if (const json* n = child_object(root, "", "numerics")) {
    reject_unknown(*n, "numerics",
                   {"rel_tol", "matsubara_tail_tol", "l_max_cap", "inner_quadrature",
                    "t_min_cutoff", "t_max", "w_max", "max_panels"});
    read(*n, "numerics", "rel_tol", cfg.numerics.rel_tol);
    read(*n, "numerics", "matsubara_tail_tol", cfg.numerics.matsubara_tail_tol);
    read(*n, "numerics", "l_max_cap", cfg.numerics.l_max_cap);
    if (n->contains("inner_quadrature")) {
      std::string q;
      read(*n, "numerics", "inner_quadrature", q);
      if (q != "gk15") throw ConfigError("numerics.inner_quadrature", "expected gk15");
    }
    read(*n, "numerics", "t_min_cutoff", cfg.numerics.t_min_cutoff);
    read(*n, "numerics", "t_max", cfg.numerics.t_max);
    read(*n, "numerics", "w_max", cfg.numerics.w_max);
    read(*n, "numerics", "max_panels", cfg.numerics.max_panels);
  }

  if (const json* o = child_object(root, "", "output")) {
    reject_unknown(*o, "output", {"path", "format"});
    read(*o, "output", "path", cfg.output_path);
    read(*o, "output", "format", cfg.output_format);
  }

  if (const json* m = child_object(root, "", "materials")) {
    reject_unknown(*m, "materials", {"plate1", "plate2"});
    if (const json* p = child_object(*m, "materials", "plate1"))
      cfg.plate1 = parse_material(*p, "materials.plate1");
    if (const json* p = child_object(*m, "materials", "plate2"))
      cfg.plate2 = parse_material(*p, "materials.plate2");
  }

  if (const json* r = child_object(root, "", "response")) {
    reject_unknown(*r, "response", {"material", "omega_min", "omega_max", "count"});
    read(*r, "response", "material", cfg.response.material);
    read(*r, "response", "omega_min", cfg.response.omega_min);
    read(*r, "response", "omega_max", cfg.response.omega_max);
    read(*r, "response", "count", cfg.response.count);
  }

  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string serialize_run_config(const RunConfig& cfg) {
  json j;
  j["scenario"] = cfg.scenario;
  j["model"] = std::string(to_string(cfg.model));
  j["temperature"] = cfg.temperature;
  j["breakdown"] = cfg.breakdown;
  json s;
  s["min_um"] = cfg.separations.min_um;
  s["max_um"] = cfg.separations.max_um;
  s["count"] = cfg.separations.count;
  s["spacing"] = cfg.separations.logarithmic ? "log" : "linear";
  if (!cfg.separations.list_um.empty()) s["list_um"] = cfg.separations.list_um;
  j["separations"] = s;
  const auto& n = cfg.numerics;
  j["numerics"] = {{"rel_tol", n.rel_tol},
                   {"matsubara_tail_tol", n.matsubara_tail_tol},
                   {"l_max_cap", n.l_max_cap},
                   {"inner_quadrature", "gk15"},
                   {"t_min_cutoff", n.t_min_cutoff},
                   {"t_max", n.t_max},
                   {"w_max", n.w_max},
                   {"max_panels", n.max_panels}};
  j["output"] = {{"path", cfg.output_path}, {"format", cfg.output_format}};
  j["materials"] = {{"plate1", material_to_json(cfg.plate1)},
                    {"plate2", material_to_json(cfg.plate2)}};
  j["response"] = {{"material", cfg.response.material},
                   {"omega_min", cfg.response.omega_min},
                   {"omega_max", cfg.response.omega_max},
                   {"count", cfg.response.count}};
  return j.dump(2) + "\n";
}

}  // namespace casimir
