#pragma once

#include <optional>
#include <string>
#include <vector>

namespace eitengine {

// Three-level lambda system: |1>, |2> are the lower levels, |3> the upper
// level. The 1-3 transition is the bright (probe) transition, 2-3 carries
// the coupling laser.
struct AtomicSystem {
  double gamma31 = 0.0;  // spontaneous decay rate 3->1 (rad/s)
  double gamma32 = 0.0;  // spontaneous decay rate 3->2 (rad/s)
  double omega13 = 0.0;  // 1-3 transition frequency (rad/s)
  double omega12 = 0.0;  // 1-2 level splitting (rad/s), < omega13
  std::optional<double> dipole13;  // |mu_13| (C m), only needed for
                                   // dipole-based cross section scales

  // 2-3 transition frequency (rad/s)
  double omega23() const { return omega13 - omega12; }
};

// Blackbody reservoir temperatures seen by the two optical transitions.
struct ReservoirConfig {
  double t13 = 0.0;  // K, reservoir filtered onto the 1-3 transition
  double t23 = 0.0;  // K, reservoir filtered onto the 2-3 transition
};

// Coherent coupling laser, resonant with 2-3.
struct DriveConfig {
  double omega_c = 0.0;  // Rabi frequency (rad/s), >= 0
};

struct EngineParams {
  AtomicSystem system;
  ReservoirConfig reservoirs;
  DriveConfig drive;
};

struct ValidationIssue {
  std::string code;     // stable machine-readable id, e.g. "omega13.order"
  std::string message;  // human-readable explanation
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  // All codes joined with ", "; empty string when ok.
  std::string summary() const;
};

// Checks every structural invariant of a parameter set. Never throws;
// collects all violations instead of stopping at the first.
ValidationReport validate(const EngineParams& params);

// Throws InvalidParamsError listing the issue codes when validation fails.
void require_valid(const EngineParams& params);

// The worked parameter set used throughout the tests and as CLI defaults:
// gamma31 = 1e7, gamma32 = 6e7, omega_c = 5e7, omega13 = 4e15,
// omega12 = 1e15, both reservoirs at 5778 K.
EngineParams reference_params();

}  // namespace eitengine
