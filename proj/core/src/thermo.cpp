#include "eitengine/thermo.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "eitengine/brightness.hpp"
#include "eitengine/constants.hpp"
#include "eitengine/errors.hpp"

namespace eitengine {

ThresholdClass lwi_threshold(const DerivedRates& rates, double rel_tol) {
  const double margin = rates.nbar23 - rates.nbar13;
  const double scale = std::max(rates.nbar23, rates.nbar13);
  if (std::abs(margin) <= rel_tol * scale) {
    return ThresholdClass::kAt;
  }
  return margin > 0.0 ? ThresholdClass::kBelow : ThresholdClass::kAbove;
}

double entropy_delta(const ReservoirConfig& reservoirs,
                     const AtomicSystem& system, double t_b) {
  if (!(t_b > 0.0) || !std::isfinite(t_b)) {
    throw DomainError("entropy_delta: t_b must be positive and finite");
  }
  return constants::hbar * (-system.omega13 / reservoirs.t13 +
                            system.omega23() / reservoirs.t23 +
                            system.omega13 / t_b);
}

double second_law_bound(const ReservoirConfig& reservoirs,
                        const AtomicSystem& system) {
  const double discriminant =
      reservoirs.t23 * system.omega13 - reservoirs.t13 * system.omega23();
  if (discriminant <= 0.0) {
    std::ostringstream msg;
    msg << "no finite brightness-temperature bound: t23*omega13 - "
           "t13*omega23 = "
        << discriminant << " <= 0 (at or above the inversion threshold)";
    throw ThresholdError(msg.str(), discriminant);
  }
  return reservoirs.t13 * reservoirs.t23 * system.omega13 / discriminant;
}

BrightnessCeiling brightness_ceiling(const DerivedRates& rates,
                                     const AtomicSystem& system) {
  const double margin = rates.nbar23 - rates.nbar13;
  if (margin <= 0.0) {
    std::ostringstream msg;
    msg << "no finite brightness ceiling: nbar23 - nbar13 = " << margin
        << " <= 0 (at or above the inversion threshold)";
    throw ThresholdError(msg.str(), margin);
  }
  BrightnessCeiling out;
  out.b_max = rates.nbar13 * (rates.nbar23 + 1.0) / margin;
  out.t_max = brightness_to_temperature(out.b_max, system.omega13);
  return out;
}

Efficiencies efficiencies(const AtomicSystem& system,
                          const ReservoirConfig& reservoirs) {
  Efficiencies e;
  e.carnot_frequency = system.omega12 / system.omega13;
  e.carnot_temperature = 1.0 - reservoirs.t23 / reservoirs.t13;
  e.eit_frequency = system.omega13 / (system.omega13 + system.omega23());
  e.eit_temperature = reservoirs.t13 / (reservoirs.t13 + reservoirs.t23);
  return e;
}

double efficiency_ratio(const ReservoirConfig& reservoirs) {
  const double t13 = reservoirs.t13;
  const double t23 = reservoirs.t23;
  if (!(t13 > t23)) {
    throw DomainError(
        "efficiency_ratio: requires t13 > t23, the enhancement is defined "
        "for a hot 1-3 reservoir only");
  }
  return t13 * t13 / (t13 * t13 - t23 * t23);
}

PowerBudget power_budget(const AtomicSystem& system) {
  PowerBudget p;
  p.coupling_fraction = system.omega23() / system.omega13;
  p.thermal_fraction = 1.0 - p.coupling_fraction;
  // re-deriving the larger fraction from the smaller one makes the pair sum
  // to 1.0 exactly (one of the two subtractions is always exact)
  p.coupling_fraction = 1.0 - p.thermal_fraction;
  return p;
}

ReservoirRange reservoir_range(const AtomicSystem& system, double t13) {
  if (!(t13 > 0.0) || !std::isfinite(t13)) {
    throw DomainError("reservoir_range: t13 must be positive and finite");
  }
  ReservoirRange r;
  r.t23_min = system.omega23() / system.omega13 * t13;
  r.t23_max = std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace eitengine
