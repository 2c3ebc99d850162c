#include "eitengine/rates.hpp"

#include <cmath>

#include "eitengine/constants.hpp"
#include "eitengine/errors.hpp"

namespace eitengine {

double occupation_number(double omega, double t) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("occupation_number: omega must be positive and finite");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("occupation_number: t must be positive and finite");
  }
  const double x = constants::hbar * omega / (constants::k_b * t);
  if (x > 700.0) {
    // exp(x) overflows; equivalent form in exp(-x) stays finite and
    // underflows gracefully to 0
    return std::exp(-x) / (-std::expm1(-x));
  }
  return 1.0 / std::expm1(x);
}

DerivedRates derive_rates(const EngineParams& params) {
  require_valid(params);
  const auto& sys = params.system;
  DerivedRates r;
  r.nbar13 = occupation_number(sys.omega13, params.reservoirs.t13);
  r.nbar23 = occupation_number(sys.omega23(), params.reservoirs.t23);
  r.r13 = sys.gamma31 * r.nbar13;
  r.r23 = sys.gamma32 * r.nbar23;
  r.gamma21 = r.r23 + r.r13;
  r.gamma31 = sys.gamma31 + sys.gamma32 + r.r23 + 2.0 * r.r13;
  r.gamma32 = sys.gamma31 + sys.gamma32 + r.r13 + 2.0 * r.r23;
  return r;
}

}  // namespace eitengine
