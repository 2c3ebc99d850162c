#pragma once

#include "eitengine/params.hpp"
#include "eitengine/rates.hpp"
#include "eitengine/spectra.hpp"
#include "eitengine/steady_state.hpp"

namespace eitengine {

// Spectral brightness in photons per mode at one detuning.
struct BrightnessPoint {
  double detuning = 0.0;      // rad/s
  double b = 0.0;             // photons per mode
  double b_normalized = 0.0;  // b / nbar13
};

// Saturated (optically thick) brightness at one detuning,
//   B = Lambda sigma_em / (sigma_abs - Lambda sigma_em).
// Throws GainMediumError when the denominator is <= 0 (the medium
// amplifies at this detuning instead of thermalizing).
BrightnessPoint saturated_brightness(const CrossSections& xs,
                                     const SteadyState& steady,
                                     const DerivedRates& rates);

// Saturated line-center brightness in closed form,
//   B(0) = -nbar13 (g21 g32t G32 nbar23 + (g21 + G32) Oc^2)
//        / (G32 nbar13 Oc^2 - g21 (g32t G32 nbar23 + Oc^2))
// with g21, g32t the dephasing widths and G32 the spontaneous 3->2 rate.
// The printed denominator is the threshold discriminant: it is negative
// below the inversion threshold; at or above (>= 0) this throws
// ThresholdError carrying the discriminant.
double line_center_brightness(const DerivedRates& rates,
                              const DriveConfig& drive,
                              const AtomicSystem& system);

// Strong-coupling limit of the line-center brightness,
//   B = nbar13 (G31 nbar13 + G32 (nbar23 + 1))
//     / (G31 nbar13 + G32 (nbar23 - nbar13)).
// Throws ThresholdError when the denominator is <= 0.
double strong_coupling_brightness(const DerivedRates& rates,
                                  const AtomicSystem& system);

// Planck brightness temperature of b photons per mode at omega13:
//   T = (hbar omega13 / k_b) / ln(1/b + 1).     Requires b > 0.
double brightness_to_temperature(double b, double omega13);

// Inverse of brightness_to_temperature (the Planck occupation).
double temperature_to_brightness(double t, double omega13);

}  // namespace eitengine
