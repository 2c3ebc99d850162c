#include "eitengine/spectra.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "eitengine/constants.hpp"
#include "eitengine/errors.hpp"

namespace eitengine {

double wavelength(const AtomicSystem& system) {
  return 2.0 * std::numbers::pi * constants::c / system.omega13;
}

double sigma0(const Sigma0Spec& spec, const AtomicSystem& system,
              const DerivedRates& rates) {
  switch (spec.mode) {
    case Sigma0Spec::Mode::kLifetimeBroadened: {
      const double lam = wavelength(system);
      return lam * lam / (2.0 * std::numbers::pi);
    }
    case Sigma0Spec::Mode::kFromDipole: {
      if (!system.dipole13) {
        throw MissingParameterError(
            "sigma0: dipole13 is required for the dipole-based scale");
      }
      const double mu = *system.dipole13;
      return 2.0 * system.omega13 * mu * mu /
             (constants::epsilon0 * constants::c * constants::hbar *
              rates.gamma31);
    }
    case Sigma0Spec::Mode::kExplicit: {
      if (!(spec.value > 0.0) || !std::isfinite(spec.value)) {
        throw DomainError("sigma0: explicit value must be positive and finite");
      }
      return spec.value;
    }
  }
  throw DomainError("sigma0: unknown mode");
}

CrossSections cross_sections(double dw, const DerivedRates& rates,
                             const DriveConfig& drive,
                             const AtomicSystem& system) {
  if (!std::isfinite(dw)) {
    throw DomainError("cross_sections: detuning must be finite");
  }
  const double g21 = rates.gamma21;
  const double g31 = rates.gamma31;
  const double g32 = rates.gamma32;
  const double cap32 = system.gamma32;  // spontaneous 3->2 rate
  const double oc2 = drive.omega_c * drive.omega_c;
  const double r23 = rates.r23;

  const double em_scale = g32 * cap32 + 2.0 * oc2 + 2.0 * g32 * r23;
  const double pump = oc2 + g32 * r23;  // coupling + thermal redistribution
  if (em_scale == 0.0 || pump == 0.0) {
    throw DegenerateInputError(
        "cross_sections: omega_c and r23 both vanish, the emission line "
        "collapses");
  }

  CrossSections out;
  out.detuning = dw;
  const double dw2 = dw * dw;

  // Beyond ~1e55 rad/s the dw^4 terms risk overflow; the same rational
  // functions evaluated in y = 1/dw^2 are exact and bounded there.
  if (std::abs(dw) < 1e55) {
    const double den = 4.0 * dw2 * (-2.0 * oc2 + g21 * g21 + g31 * g31) +
                       (oc2 + g21 * g31) * (oc2 + g21 * g31) +
                       16.0 * dw2 * dw2;
    out.sigma_abs_norm =
        g31 * (g21 * oc2 + g31 * (g21 * g21 + 4.0 * dw2)) / den;
    const double em_num =
        g31 * cap32 * oc2 * (oc2 + g21 * g31 - 4.0 * dw2) +
        g31 * (g21 * (oc2 + g21 * g31) + 4.0 * g31 * dw2) * pump;
    out.sigma_em_norm = em_num / (den * em_scale);
  } else {
    const double y = 1.0 / dw2;
    const double y2 = y * y;
    const double den = 4.0 * y * (-2.0 * oc2 + g21 * g21 + g31 * g31) +
                       (oc2 + g21 * g31) * (oc2 + g21 * g31) * y2 + 16.0;
    out.sigma_abs_norm =
        g31 * (g21 * oc2 * y2 + g31 * (g21 * g21 * y2 + 4.0 * y)) / den;
    const double em_num =
        g31 * cap32 * oc2 * ((oc2 + g21 * g31) * y2 - 4.0 * y) +
        g31 * (g21 * (oc2 + g21 * g31) * y2 + 4.0 * g31 * y) * pump;
    out.sigma_em_norm = em_num / (den * em_scale);
  }
  return out;
}

double susceptibility_absorption(double dw, const DerivedRates& rates,
                                 const DriveConfig& drive) {
  const std::complex<double> two_i_dw(0.0, 2.0 * dw);
  const std::complex<double> a = rates.gamma21 + two_i_dw;
  const std::complex<double> b = rates.gamma31 + two_i_dw;
  const double oc2 = drive.omega_c * drive.omega_c;
  return rates.gamma31 * std::real(a / (a * b + oc2));
}

}  // namespace eitengine
