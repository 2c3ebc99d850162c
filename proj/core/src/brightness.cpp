#include "eitengine/brightness.hpp"

#include <cmath>
#include <sstream>

#include "eitengine/constants.hpp"
#include "eitengine/errors.hpp"

namespace eitengine {

BrightnessPoint saturated_brightness(const CrossSections& xs,
                                     const SteadyState& steady,
                                     const DerivedRates& rates) {
  const double emission = steady.lambda * xs.sigma_em_norm;
  const double net = xs.sigma_abs_norm - emission;
  if (net <= 0.0) {
    std::ostringstream msg;
    msg << "medium amplifies at detuning " << xs.detuning
        << " rad/s (sigma_abs - Lambda sigma_em = " << net
        << "), no saturated brightness exists";
    throw GainMediumError(msg.str());
  }
  BrightnessPoint out;
  out.detuning = xs.detuning;
  out.b = emission / net;
  out.b_normalized = out.b / rates.nbar13;
  return out;
}

double line_center_brightness(const DerivedRates& rates,
                              const DriveConfig& drive,
                              const AtomicSystem& system) {
  const double oc2 = drive.omega_c * drive.omega_c;
  const double g21 = rates.gamma21;
  const double g32 = rates.gamma32;
  const double cap32 = system.gamma32;
  const double num =
      rates.nbar13 * (g21 * g32 * cap32 * rates.nbar23 + (g21 + cap32) * oc2);
  const double den =
      cap32 * rates.nbar13 * oc2 - g21 * (g32 * cap32 * rates.nbar23 + oc2);
  if (den >= 0.0) {
    std::ostringstream msg;
    msg << "line-center inversion threshold reached: G32 nbar13 Oc^2 - "
           "g21 (g32 G32 nbar23 + Oc^2) = "
        << den << " >= 0, brightness saturates only below threshold";
    throw ThresholdError(msg.str(), den);
  }
  return -num / den;
}

double strong_coupling_brightness(const DerivedRates& rates,
                                  const AtomicSystem& system) {
  const double num = system.gamma31 * rates.nbar13 +
                     system.gamma32 * (rates.nbar23 + 1.0);
  const double den = system.gamma31 * rates.nbar13 +
                     system.gamma32 * (rates.nbar23 - rates.nbar13);
  if (den <= 0.0) {
    std::ostringstream msg;
    msg << "strong-coupling threshold reached: G31 nbar13 + G32 (nbar23 - "
           "nbar13) = "
        << den << " <= 0";
    throw ThresholdError(msg.str(), den);
  }
  return rates.nbar13 * num / den;
}

double brightness_to_temperature(double b, double omega13) {
  if (!(omega13 > 0.0) || !std::isfinite(omega13)) {
    throw DomainError("brightness_to_temperature: omega13 must be positive");
  }
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw DomainError(
        "brightness_to_temperature: brightness must be positive and finite");
  }
  return (constants::hbar * omega13 / constants::k_b) / std::log1p(1.0 / b);
}

double temperature_to_brightness(double t, double omega13) {
  return occupation_number(omega13, t);
}

}  // namespace eitengine
