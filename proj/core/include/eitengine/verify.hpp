#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eitengine/params.hpp"

namespace eitengine {

// One cross-check between a closed-form expression and its brute-force
// counterpart (or between two independently derived closed forms).
struct CheckResult {
  std::string name;
  bool pass = false;
  double max_rel_dev = 0.0;  // worst relative deviation seen
  double tolerance = 0.0;
  std::uint64_t samples = 0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool ok() const;
};

// Deterministic self-verification: every closed form is replayed against
// its independent route over seeded random parameter draws plus the given
// operating point. Identical seeds give identical reports.
//
// The individual checks are exposed for targeted tests; `perturbation`
// scales a deliberate relative distortion of one input of the reference
// route (0 = honest check) so tests can prove the comparisons have teeth.
CheckResult check_susceptibility(const EngineParams& params,
                                 std::uint64_t seed, std::uint64_t draws,
                                 double perturbation = 0.0);
CheckResult check_liouvillian(const EngineParams& params,
                              double perturbation = 0.0);
CheckResult check_liouvillian_limit(const EngineParams& params);
CheckResult check_transfer_integrator(const EngineParams& params,
                                      std::uint64_t seed,
                                      std::uint64_t draws);
CheckResult check_temperature_identity(std::uint64_t seed,
                                       std::uint64_t draws,
                                       double perturbation = 0.0);
CheckResult check_line_center_consistency(std::uint64_t seed,
                                          std::uint64_t draws);
CheckResult check_detailed_balance(const EngineParams& params,
                                   std::uint64_t seed, std::uint64_t draws);
CheckResult check_rate_identity(std::uint64_t seed, std::uint64_t draws);

VerifyReport run_verification(const EngineParams& params, std::uint64_t seed);

}  // namespace eitengine
