#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eitengine/params.hpp"
#include "eitengine/spectra.hpp"
#include "eitengine/transfer.hpp"

namespace eitengine_cli {

// Uniform sample grid specification, parsed from "MIN:MAX:COUNT" or
// "MIN:MAX:COUNT:log" (also ":lin" to be explicit). Log spacing requires
// 0 < MIN < MAX.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  bool log = false;

  std::vector<double> samples() const;
};

GridSpec parse_grid(const std::string& text);

// Numeric overrides accumulated from command-line flags; unset fields keep
// the config-file (or built-in) values.
struct ParamOverrides {
  std::optional<double> gamma31;
  std::optional<double> gamma32;
  std::optional<double> omega13;
  std::optional<double> omega12;
  std::optional<double> dipole13;
  std::optional<double> t13;
  std::optional<double> t23;
  std::optional<double> omega_c;
};

// Layered parameter resolution: built-in defaults, then the JSON config
// file (strict: unknown keys are errors), then individual flag overrides.
// The file mirrors the parameter structure:
//   {"system": {...}, "reservoirs": {...}, "drive": {...}}
eitengine::EngineParams load_params(const std::string& config_path,
                                    const ParamOverrides& overrides);

// Parses the config document from memory; exposed for tests.
eitengine::EngineParams parse_config(const std::string& json_text);

eitengine::Sigma0Spec parse_sigma0(const std::string& mode, double value);

eitengine::DepthConvention parse_depth_convention(const std::string& name);

}  // namespace eitengine_cli
