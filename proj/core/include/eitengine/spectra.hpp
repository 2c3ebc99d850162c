#pragma once

#include "eitengine/params.hpp"
#include "eitengine/rates.hpp"

namespace eitengine {

// Absorption/emission cross sections at one probe detuning, normalized to
// the resonant two-level scale sigma_0.
struct CrossSections {
  double detuning = 0.0;        // rad/s from the 1-3 line center
  double sigma_abs_norm = 0.0;  // sigma_abs / sigma_0
  double sigma_em_norm = 0.0;   // sigma_em / sigma_0
};

// How to obtain the absolute scale sigma_0 (m^2).
struct Sigma0Spec {
  enum class Mode {
    kLifetimeBroadened,  // sigma_0 = lambda^2 / (2 pi), lambda = 2 pi c / omega13
    kFromDipole,         // sigma_0 = 2 omega13 |mu13|^2 / (eps0 c hbar gamma31),
                         // gamma31 the 1-3 dephasing width
    kExplicit,           // caller supplies the value
  };
  Mode mode = Mode::kLifetimeBroadened;
  double value = 0.0;  // m^2, used only in kExplicit mode
};

// Probe wavelength 2 pi c / omega13 (m).
double wavelength(const AtomicSystem& system);

// Absolute resonant cross section scale (m^2). kFromDipole requires
// system.dipole13 (MissingParameterError otherwise).
double sigma0(const Sigma0Spec& spec, const AtomicSystem& system,
              const DerivedRates& rates);

// Normalized absorption and emission cross sections of the driven line at
// probe detuning dw. Even in dw. Large detunings are evaluated in 1/dw^2
// to avoid overflow of the dw^4 terms; the far wings go over smoothly into
// Lorentzian tails ~ 1/dw^2.
CrossSections cross_sections(double dw, const DerivedRates& rates,
                             const DriveConfig& drive,
                             const AtomicSystem& system);

// Brute-force cross-check of sigma_abs_norm by complex arithmetic:
//   sigma_abs / sigma_0 = gamma31 * Re[(gamma21 + 2 i dw)
//                          / ((gamma21 + 2 i dw)(gamma31 + 2 i dw) + Oc^2)]
// Independent of the rational-polynomial route in cross_sections.
double susceptibility_absorption(double dw, const DerivedRates& rates,
                                 const DriveConfig& drive);

}  // namespace eitengine
