#include "eitengine_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "eitengine/errors.hpp"
#include "json.hpp"

namespace eitengine_cli {

using eitengine::DomainError;
using eitengine::EngineParams;
using eitengine::InvalidParamsError;

std::vector<double> GridSpec::samples() const {
  if (count < 1) {
    throw DomainError("grid: COUNT must be >= 1");
  }
  if (!(std::isfinite(min) && std::isfinite(max)) || min > max) {
    throw DomainError("grid: require finite MIN <= MAX");
  }
  if (log && !(min > 0.0)) {
    throw DomainError("grid: log spacing requires MIN > 0");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(min);
    return out;
  }
  const double lo = log ? std::log(min) : min;
  const double hi = log ? std::log(max) : max;
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    const double v = lo + (hi - lo) * t;
    out.push_back(log ? std::exp(v) : v);
  }
  out.front() = min;
  out.back() = max;
  return out;
}

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream stream(text);
  while (std::getline(stream, piece, ':')) parts.push_back(piece);
  if (parts.size() < 3 || parts.size() > 4) {
    throw DomainError("grid: expected MIN:MAX:COUNT[:log|lin], got '" + text +
                      "'");
  }
  GridSpec spec;
  try {
    std::size_t used = 0;
    spec.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    spec.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    spec.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::exception&) {
    throw DomainError("grid: could not parse '" + text + "'");
  }
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      spec.log = true;
    } else if (parts[3] != "lin") {
      throw DomainError("grid: spacing must be log or lin, got '" + parts[3] +
                        "'");
    }
  }
  return spec;
}

namespace {

double require_number(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) {
    throw InvalidParamsError("config: " + where + " must be a number");
  }
  return v.get<double>();
}

void apply_section(const nlohmann::json& doc, const std::string& name,
                   const std::vector<std::pair<std::string, double*>>& fields,
                   std::optional<double>* dipole = nullptr) {
  if (!doc.contains(name)) return;
  const auto& section = doc.at(name);
  if (!section.is_object()) {
    throw InvalidParamsError("config: " + name + " must be an object");
  }
  for (const auto& [key, value] : section.items()) {
    bool known = false;
    for (const auto& [field_name, slot] : fields) {
      if (key == field_name) {
        *slot = require_number(value, name + "." + key);
        known = true;
        break;
      }
    }
    if (!known && dipole && key == "dipole13") {
      if (value.is_null()) {
        dipole->reset();
      } else {
        *dipole = require_number(value, name + ".dipole13");
      }
      known = true;
    }
    if (!known) {
      throw InvalidParamsError("config: unknown key " + name + "." + key);
    }
  }
}

}  // namespace

EngineParams parse_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParamsError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InvalidParamsError("config: top level must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "system" && key != "reservoirs" && key != "drive") {
      throw InvalidParamsError("config: unknown section " + key);
    }
  }

  EngineParams p = eitengine::reference_params();
  apply_section(doc, "system",
                {{"gamma31", &p.system.gamma31},
                 {"gamma32", &p.system.gamma32},
                 {"omega13", &p.system.omega13},
                 {"omega12", &p.system.omega12}},
                &p.system.dipole13);
  apply_section(doc, "reservoirs",
                {{"t13", &p.reservoirs.t13}, {"t23", &p.reservoirs.t23}});
  apply_section(doc, "drive", {{"omega_c", &p.drive.omega_c}});
  return p;
}

EngineParams load_params(const std::string& config_path,
                         const ParamOverrides& overrides) {
  EngineParams p = eitengine::reference_params();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      throw InvalidParamsError("config: cannot open " + config_path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    p = parse_config(text.str());
  }
  if (overrides.gamma31) p.system.gamma31 = *overrides.gamma31;
  if (overrides.gamma32) p.system.gamma32 = *overrides.gamma32;
  if (overrides.omega13) p.system.omega13 = *overrides.omega13;
  if (overrides.omega12) p.system.omega12 = *overrides.omega12;
  if (overrides.dipole13) p.system.dipole13 = *overrides.dipole13;
  if (overrides.t13) p.reservoirs.t13 = *overrides.t13;
  if (overrides.t23) p.reservoirs.t23 = *overrides.t23;
  if (overrides.omega_c) p.drive.omega_c = *overrides.omega_c;
  return p;
}

eitengine::Sigma0Spec parse_sigma0(const std::string& mode, double value) {
  eitengine::Sigma0Spec spec;
  if (mode == "lifetime") {
    spec.mode = eitengine::Sigma0Spec::Mode::kLifetimeBroadened;
  } else if (mode == "dipole") {
    spec.mode = eitengine::Sigma0Spec::Mode::kFromDipole;
  } else if (mode == "explicit") {
    spec.mode = eitengine::Sigma0Spec::Mode::kExplicit;
    spec.value = value;
  } else {
    throw DomainError("unknown sigma0 mode: " + mode +
                      " (expected lifetime, dipole or explicit)");
  }
  return spec;
}

eitengine::DepthConvention parse_depth_convention(const std::string& name) {
  if (name == "eit") return eitengine::DepthConvention::kEit;
  if (name == "bare") return eitengine::DepthConvention::kBare;
  throw DomainError("unknown depth convention: " + name +
                    " (expected eit or bare)");
}

}  // namespace eitengine_cli
