#include "eitengine/transfer.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "eitengine/errors.hpp"

namespace eitengine {

namespace {

struct ChannelSetup {
  DerivedRates rates;
  SteadyState steady;
  double sigma0_abs = 0.0;  // m^2
};

ChannelSetup channel_setup(const EngineParams& params,
                           const Sigma0Spec& sigma0_spec) {
  ChannelSetup s;
  s.rates = derive_rates(params);
  s.steady = populations(s.rates, params.drive, params.system);
  s.sigma0_abs = sigma0(sigma0_spec, params.system, s.rates);
  return s;
}

void check_medium(const MediumConfig& medium) {
  if (!(medium.density > 0.0) || !std::isfinite(medium.density)) {
    throw DomainError("medium density must be positive and finite");
  }
  if (!(medium.length > 0.0) || !std::isfinite(medium.length)) {
    throw DomainError("medium length must be positive and finite");
  }
}

}  // namespace

MediumConfig medium_from_depth(double depth, DepthConvention convention,
                               const EngineParams& params,
                               const Sigma0Spec& sigma0_spec, double length) {
  if (!(depth > 0.0) || !std::isfinite(depth)) {
    throw DomainError("optical depth must be positive and finite");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("medium length must be positive and finite");
  }
  const ChannelSetup s = channel_setup(params, sigma0_spec);
  double sigma_ref = s.sigma0_abs;
  if (convention == DepthConvention::kEit) {
    const CrossSections xs0 =
        cross_sections(0.0, s.rates, params.drive, params.system);
    sigma_ref *= xs0.sigma_abs_norm;
  }
  MediumConfig medium;
  medium.length = length;
  medium.density = depth / (s.steady.rho11 * sigma_ref * length);
  return medium;
}

TransferCoefficients transfer_coefficients(const CrossSections& xs,
                                           const SteadyState& steady,
                                           double sigma0_abs,
                                           const MediumConfig& medium) {
  check_medium(medium);
  const double upper = steady.rho22 + steady.rho33;
  const double n_sigma = medium.density * sigma0_abs;
  TransferCoefficients c;
  c.alpha = n_sigma * (xs.sigma_abs_norm * steady.rho11 -
                       xs.sigma_em_norm * upper);
  c.source = n_sigma * xs.sigma_em_norm * upper;
  return c;
}

double analytic_transfer(const TransferCoefficients& coeffs, double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("analytic_transfer: z must be >= 0 and finite");
  }
  if (coeffs.alpha == 0.0) {
    return coeffs.source * z;
  }
  // -expm1 keeps full precision through alpha*z -> 0 and covers the
  // amplifying branch (alpha < 0) with the same expression
  return coeffs.source * (-std::expm1(-coeffs.alpha * z)) / coeffs.alpha;
}

double integrate_transfer_channel(const TransferCoefficients& coeffs,
                                  double z) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 1>;
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("integrate_transfer_channel: z must be >= 0 and finite");
  }
  if (z == 0.0 || (coeffs.source == 0.0 && coeffs.alpha >= 0.0)) {
    return 0.0;
  }
  const double b_char =
      std::abs(coeffs.source) *
      (coeffs.alpha > 0.0 ? std::min(z, 1.0 / coeffs.alpha) : z);
  const double atol = std::max(1e-14 * b_char, 1e-300);
  auto stepper =
      odeint::make_controlled<odeint::runge_kutta_cash_karp54<State>>(atol,
                                                                      1e-9);
  const auto rhs = [&coeffs](const State& b, State& dbdz, double) {
    dbdz[0] = coeffs.source - coeffs.alpha * b[0];
  };
  State state{0.0};
  try {
    odeint::integrate_adaptive(stepper, rhs, state, 0.0, z, z * 1e-2);
  } catch (const std::exception& e) {
    throw NumericalError(std::string("transfer integration failed: ") +
                         e.what());
  }
  return state[0];
}

namespace {

TransferField make_field(const std::vector<double>& detunings,
                         const MediumConfig& medium,
                         const EngineParams& params,
                         const Sigma0Spec& sigma0_spec, int z_count) {
  if (z_count < 2) {
    throw DomainError("z_count must be >= 2");
  }
  check_medium(medium);
  TransferField field;
  field.detunings = detunings;
  field.z.resize(static_cast<std::size_t>(z_count));
  for (int k = 0; k < z_count; ++k) {
    field.z[static_cast<std::size_t>(k)] =
        medium.length * static_cast<double>(k) /
        static_cast<double>(z_count - 1);
  }
  const ChannelSetup s = channel_setup(params, sigma0_spec);
  field.coefficients.reserve(detunings.size());
  field.amplifying.reserve(detunings.size());
  for (const double dw : detunings) {
    const CrossSections xs =
        cross_sections(dw, s.rates, params.drive, params.system);
    const TransferCoefficients c =
        transfer_coefficients(xs, s.steady, s.sigma0_abs, medium);
    field.coefficients.push_back(c);
    field.amplifying.push_back(c.alpha < 0.0 ? 1 : 0);
  }
  return field;
}

}  // namespace

TransferField integrate_transfer(const std::vector<double>& detunings,
                                 const MediumConfig& medium,
                                 const EngineParams& params,
                                 const Sigma0Spec& sigma0_spec, int z_count) {
  TransferField field =
      make_field(detunings, medium, params, sigma0_spec, z_count);
  field.brightness.resize(detunings.size());
  for (std::size_t i = 0; i < detunings.size(); ++i) {
    auto& row = field.brightness[i];
    row.assign(field.z.size(), 0.0);
    for (std::size_t k = 1; k < field.z.size(); ++k) {
      row[k] = integrate_transfer_channel(field.coefficients[i], field.z[k]);
    }
  }
  return field;
}

TransferField analytic_transfer_field(const std::vector<double>& detunings,
                                      const MediumConfig& medium,
                                      const EngineParams& params,
                                      const Sigma0Spec& sigma0_spec,
                                      int z_count) {
  TransferField field =
      make_field(detunings, medium, params, sigma0_spec, z_count);
  field.brightness.resize(detunings.size());
  for (std::size_t i = 0; i < detunings.size(); ++i) {
    auto& row = field.brightness[i];
    row.assign(field.z.size(), 0.0);
    for (std::size_t k = 0; k < field.z.size(); ++k) {
      row[k] = analytic_transfer(field.coefficients[i], field.z[k]);
    }
  }
  return field;
}

TailRatio tail_ratio(const EngineParams& params, double depth, double k,
                     DepthConvention convention) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("tail_ratio: wing multiple k must be positive");
  }
  // sigma_0 cancels between depth normalization and attenuation; a unit
  // explicit scale keeps the arithmetic clean
  Sigma0Spec unit;
  unit.mode = Sigma0Spec::Mode::kExplicit;
  unit.value = 1.0;
  const MediumConfig medium =
      medium_from_depth(depth, convention, params, unit);
  const DerivedRates rates = derive_rates(params);
  const double dw = k * rates.gamma31;
  const TransferField field =
      analytic_transfer_field({0.0, dw, -dw}, medium, params, unit, 2);
  TailRatio out;
  out.b_peak = field.brightness[0].back();
  out.b_tail_plus = field.brightness[1].back();
  out.b_tail_minus = field.brightness[2].back();
  if (out.b_tail_plus <= 0.0) {
    throw NumericalError("tail_ratio: wing brightness vanished");
  }
  out.ratio = out.b_peak / out.b_tail_plus;
  return out;
}

}  // namespace eitengine
