#pragma once

#include <cstdint>
#include <vector>

#include "eitengine/brightness.hpp"
#include "eitengine/params.hpp"
#include "eitengine/spectra.hpp"

namespace eitengine {

enum class DepthConvention {
  kEit,   // depth = N rho11 sigma_abs(0) L with the driven (EIT-suppressed)
          // line-center cross section
  kBare,  // depth = N rho11 sigma_0 L
};

struct MediumConfig {
  double density = 0.0;  // ground-manifold atom density N (m^-3)
  double length = 0.0;   // medium length L (m)
};

// Picks N for a given line-center optical depth and length.
MediumConfig medium_from_depth(double depth, DepthConvention convention,
                               const EngineParams& params,
                               const Sigma0Spec& sigma0_spec,
                               double length = 1.0);

// Net absorption coefficient and source density of the radiative transfer
// equation dB/dz = source - alpha B at one detuning:
//   alpha  = N (sigma_abs rho11 - sigma_em (rho22 + rho33))   (1/m)
//   source = N sigma_em (rho22 + rho33)                       (1/m)
struct TransferCoefficients {
  double alpha = 0.0;
  double source = 0.0;
};
TransferCoefficients transfer_coefficients(const CrossSections& xs,
                                           const SteadyState& steady,
                                           double sigma0_abs,
                                           const MediumConfig& medium);

// Closed-form solution B(z) = (source/alpha)(1 - exp(-alpha z)) with
// B(0) = 0, continuous at alpha = 0 (-> source * z). Negative alpha gives
// the growing (amplifying) branch of the same expression.
double analytic_transfer(const TransferCoefficients& coeffs, double z);

// Brightness field over a detuning grid and a uniform z grid [0, L].
struct TransferField {
  std::vector<double> detunings;  // rad/s
  std::vector<double> z;          // m, z.front() == 0, z.back() == L
  // brightness[i][k] is B at detunings[i], z[k]; photons per mode
  std::vector<std::vector<double>> brightness;
  std::vector<TransferCoefficients> coefficients;  // per detuning
  std::vector<std::uint8_t> amplifying;            // alpha < 0 flags
};

// Numeric counterpart of analytic_transfer for a single channel: adaptive
// embedded Runge-Kutta at relative tolerance 1e-9 from 0 to z. The two
// routes must agree to 1e-8 relative.
double integrate_transfer_channel(const TransferCoefficients& coeffs,
                                  double z);

// Numerically integrates dB/dz = source - alpha B per detuning with an
// adaptive embedded Runge-Kutta pair at relative tolerance 1e-9. Exists as
// the brute-force counterpart of analytic_transfer; the two must agree to
// 1e-8 relative. z_count >= 2 output points, uniformly spaced.
TransferField integrate_transfer(const std::vector<double>& detunings,
                                 const MediumConfig& medium,
                                 const EngineParams& params,
                                 const Sigma0Spec& sigma0_spec,
                                 int z_count = 11);

// Same field evaluated with analytic_transfer.
TransferField analytic_transfer_field(const std::vector<double>& detunings,
                                      const MediumConfig& medium,
                                      const EngineParams& params,
                                      const Sigma0Spec& sigma0_spec,
                                      int z_count = 11);

// Peak-to-wing contrast of the emerging radiation: B(0, L) divided by
// B(k gamma31, L), gamma31 the 1-3 dephasing width, at the given
// line-center optical depth. Also reports both wing values so callers can
// assert the +/- symmetry.
struct TailRatio {
  double ratio = 0.0;
  double b_peak = 0.0;       // B(0, L)
  double b_tail_plus = 0.0;  // B(+k gamma31, L)
  double b_tail_minus = 0.0; // B(-k gamma31, L)
};
TailRatio tail_ratio(const EngineParams& params, double depth = 10.0,
                     double k = 10.0,
                     DepthConvention convention = DepthConvention::kEit);

}  // namespace eitengine
