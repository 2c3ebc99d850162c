#pragma once

// Frozen anchor values for the worked parameter set (reference_params()).
// Computed once with a 50-digit arbitrary-precision reimplementation of the
// same closed forms and rounded to the nearest double. Tests compare against
// these at near-roundoff tolerances; any regression in the formula wiring
// shows up as a mismatch here.

#include <algorithm>
#include <cmath>

namespace anchors {

// occupations and pumping rates
inline constexpr double kNbar13 = 0.0050785060867423344;
inline constexpr double kNbar23 = 0.019317978485851414;
inline constexpr double kR13 = 50785.060867423344;
inline constexpr double kR23 = 1159078.7091510848;

// dephasing widths
inline constexpr double kGamma21 = 1209863.7700185082;
inline constexpr double kGamma31 = 71260648.830885932;
inline constexpr double kGamma32 = 72368942.479169593;

// steady state
inline constexpr double kLambda = 0.018596848117153168;
inline constexpr double kLambdaDriveOff = 0.27166748811741926;
inline constexpr double kLambdaStrongDrive = 0.010105690363463088;
inline constexpr double kRho11 = 0.98174268048096860;
inline constexpr double kRho22 = 0.013296725746262932;
inline constexpr double kRho33 = 0.0049605937727684730;

// normalized cross sections at line center and at |dw| = m * kGamma31
inline constexpr double kSigmaAbs0 = 0.033336615351518682;
inline constexpr double kSigmaEm0 = 0.44366837020189105;
inline constexpr double kSigmaAbs1 = 0.24559726923763804;
inline constexpr double kSigmaEm1 = 0.019392380147631057;
inline constexpr double kSigmaAbs2 = 0.062409444274997449;
inline constexpr double kSigmaEm2 = 0.0035899614172434122;
inline constexpr double kSigmaAbs10 = 0.0024999520902807389;
inline constexpr double kSigmaEm10 = 0.00012661780666485741;

// saturated brightness
inline constexpr double kB0 = 0.32890476671007806;
inline constexpr double kB0OverNbar13 = 64.764078469591392;
inline constexpr double kB1 = 0.0014705680189904040;
inline constexpr double kB2 = 0.0010708869870777123;
inline constexpr double kBTail10 = 0.00094278290056153360;
inline constexpr double kBInf = 0.34342760472584928;
inline constexpr double kBInfOverNbar13 = 67.623745814223260;
inline constexpr double kBAtOmegaC1e12 = 0.34342760468791390;

// Rabi sweep, omega_c in units of kGamma31 (the 1-3 dephasing width)
inline constexpr double kSweepB001OverNbar13 = 1.3003907773596696;
inline constexpr double kSweepB1OverNbar13 = 66.184534835508091;
inline constexpr double kSweepB1e3OverBInfMinus1 = -2.1752526480214596e-8;
inline constexpr double kSweepB1e5OverBInfMinus1 = -2.1752526960441146e-12;

// thermodynamics
inline constexpr double kBMax = 0.36353963215590580;
inline constexpr double kBMaxOverNbar13 = 71.583970944711901;
inline constexpr double kTBound = 23112.0;
inline constexpr double kTAtB0 = 21880.690387857319;
inline constexpr double kTAtB0OverT13 = 3.7868969172477187;
inline constexpr double kTAtBInfOverT13 = 3.8766798758367486;
inline constexpr double kT23Lower = 4333.5;
inline constexpr double kHbarOmega13OverKb = 30552.930310310584;
inline constexpr double kEtaCarnotFreq = 0.25;
inline constexpr double kEtaEitFreq = 0.57142857142857143;

// optics scales
inline constexpr double kWavelength = 4.7091289182721332e-7;
inline constexpr double kSigma0Lifetime = 3.5294033336192098e-14;

// transfer through a medium of line-center depth 10 (driven convention)
inline constexpr double kAlphaLCenter = 7.5249937019615348;
inline constexpr double kAlphaLTail = 0.74920545227081219;
inline constexpr double kBExitCenter = 0.32872734493233783;
inline constexpr double kBExitTail = 0.00049708980805266942;
inline constexpr double kTailRatioDriven = 661.30373145270229;
inline constexpr double kTailRatioBare = 3137.9132117184142;

// second parameter set: t13 = 9000 K, t23 = 7000 K, omega_c = 2e7
inline constexpr double kAltNbar13 = 0.034712823338499258;
inline constexpr double kAltNbar23 = 0.039363358728391014;
inline constexpr double kAltLambda = 0.32884781725360578;

inline double rel_err(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

}  // namespace anchors
