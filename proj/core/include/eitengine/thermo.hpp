#pragma once

#include "eitengine/params.hpp"
#include "eitengine/rates.hpp"

namespace eitengine {

enum class ThresholdClass {
  kBelow,  // nbar23 > nbar13: ordinary thermal regime
  kAt,     // nbar23 == nbar13 within tolerance
  kAbove,  // nbar23 < nbar13: inversion (gain without population inversion)
};

// Classifies the reservoir configuration against the inversion threshold
// nbar23 = nbar13 (equivalently T23 omega13 = T13 omega23).
ThresholdClass lwi_threshold(const DerivedRates& rates,
                             double rel_tol = 1e-12);

// Entropy change per emitted photon (J/K),
//   dS = -hbar omega13 / t13 + hbar omega23 / t23 + hbar omega13 / t_b.
double entropy_delta(const ReservoirConfig& reservoirs,
                     const AtomicSystem& system, double t_b);

// Largest brightness temperature allowed by dS >= 0:
//   T_B <= t13 t23 omega13 / (t23 omega13 - t13 omega23).
// Throws ThresholdError (discriminant = t23 omega13 - t13 omega23) when the
// configuration is at or above threshold, where no finite bound exists.
double second_law_bound(const ReservoirConfig& reservoirs,
                        const AtomicSystem& system);

// Brightness ceiling B_max = nbar13 (nbar23 + 1) / (nbar23 - nbar13) and
// its Planck temperature, which coincides with second_law_bound exactly.
struct BrightnessCeiling {
  double b_max = 0.0;
  double t_max = 0.0;  // K
};
BrightnessCeiling brightness_ceiling(const DerivedRates& rates,
                                     const AtomicSystem& system);

// Both bookkeeping forms of the two efficiencies. The frequency and
// temperature forms coincide only where omega23/t23 = omega13/t13.
struct Efficiencies {
  double carnot_frequency = 0.0;  // omega12 / omega13
  double carnot_temperature = 0.0;  // 1 - t23/t13
  double eit_frequency = 0.0;     // omega13 / (omega13 + omega23)
  double eit_temperature = 0.0;   // t13 / (t13 + t23)
};
Efficiencies efficiencies(const AtomicSystem& system,
                          const ReservoirConfig& reservoirs);

// Enhancement of the frequency-form efficiency over the temperature-form
// Carnot value: t13^2 / (t13^2 - t23^2), > 1. Requires t13 > t23
// (DomainError otherwise).
double efficiency_ratio(const ReservoirConfig& reservoirs);

// Split of the invested power: fraction omega23/omega13 enters through the
// coupling laser, the rest (omega12/omega13) through the hot reservoir.
// The two fractions sum to 1 exactly.
struct PowerBudget {
  double coupling_fraction = 0.0;
  double thermal_fraction = 0.0;
};
PowerBudget power_budget(const AtomicSystem& system);

// Reservoir temperatures that keep the engine below threshold:
// t23 > (omega23/omega13) t13, unbounded above.
struct ReservoirRange {
  double t23_min = 0.0;  // K, exclusive
  double t23_max = 0.0;  // +infinity
};
ReservoirRange reservoir_range(const AtomicSystem& system, double t13);

}  // namespace eitengine
