#include "eitengine/params.hpp"

#include <cmath>

#include "eitengine/errors.hpp"

namespace eitengine {

namespace {

bool finite(double x) { return std::isfinite(x); }

void check_positive(std::vector<ValidationIssue>& issues, double v,
                    const char* name) {
  if (!finite(v)) {
    issues.push_back({std::string(name) + ".nonfinite",
                      std::string(name) + " must be finite"});
  } else if (v <= 0.0) {
    issues.push_back({std::string(name) + ".nonpositive",
                      std::string(name) + " must be > 0"});
  }
}

}  // namespace

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += ", ";
    out += issue.code;
  }
  return out;
}

ValidationReport validate(const EngineParams& params) {
  ValidationReport report;
  auto& issues = report.issues;
  const auto& sys = params.system;

  check_positive(issues, sys.gamma31, "gamma31");
  check_positive(issues, sys.gamma32, "gamma32");
  check_positive(issues, sys.omega13, "omega13");
  check_positive(issues, sys.omega12, "omega12");
  if (finite(sys.omega13) && finite(sys.omega12) && sys.omega12 > 0.0 &&
      sys.omega12 >= sys.omega13) {
    issues.push_back({"omega13.order",
                      "level ordering requires omega13 > omega12 > 0"});
  }
  if (sys.dipole13) {
    if (!finite(*sys.dipole13)) {
      issues.push_back({"dipole13.nonfinite", "dipole13 must be finite"});
    } else if (*sys.dipole13 <= 0.0) {
      issues.push_back({"dipole13.nonpositive",
                        "dipole13, when given, must be > 0"});
    }
  }

  check_positive(issues, params.reservoirs.t13, "t13");
  check_positive(issues, params.reservoirs.t23, "t23");

  const double oc = params.drive.omega_c;
  if (!finite(oc)) {
    issues.push_back({"omega_c.nonfinite", "omega_c must be finite"});
  } else if (oc < 0.0) {
    issues.push_back({"omega_c.negative", "omega_c must be >= 0"});
  }

  return report;
}

void require_valid(const EngineParams& params) {
  const ValidationReport report = validate(params);
  if (!report.ok()) {
    throw InvalidParamsError("invalid parameters: " + report.summary());
  }
}

EngineParams reference_params() {
  EngineParams p;
  p.system.gamma31 = 1e7;
  p.system.gamma32 = 6e7;
  p.system.omega13 = 4e15;
  p.system.omega12 = 1e15;
  p.reservoirs.t13 = 5778.0;
  p.reservoirs.t23 = 5778.0;
  p.drive.omega_c = 5e7;
  return p;
}

}  // namespace eitengine
