#include "eitengine/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "eitengine/brightness.hpp"
#include "eitengine/constants.hpp"
#include "eitengine/rates.hpp"
#include "eitengine/spectra.hpp"
#include "eitengine/steady_state.hpp"
#include "eitengine/thermo.hpp"
#include "eitengine/transfer.hpp"

namespace eitengine {

namespace {

// Deterministic draws straight from the engine words; distribution adapters
// in the standard library are implementation-defined, these are not.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform01() {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  double log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
  }
  double sign() { return (eng() & 1u) ? 1.0 : -1.0; }
};

double rel_dev(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

// Random engine parameters safely below the inversion threshold:
// x23 = x13/(1+margin) keeps nbar23 above nbar13 by at least ~2%.
EngineParams thermal_draw(Rng& rng) {
  EngineParams p;
  p.system.omega13 = rng.log_uniform(1e14, 1e16);
  p.system.omega12 = rng.uniform(0.05, 0.95) * p.system.omega13;
  p.system.gamma31 = rng.log_uniform(1e4, 1e8);
  p.system.gamma32 = rng.log_uniform(1e4, 1e8);
  const double x13 = rng.log_uniform(0.1, 25.0);
  p.reservoirs.t13 =
      constants::hbar * p.system.omega13 / (constants::k_b * x13);
  const double margin = rng.log_uniform(0.02, 10.0);
  p.reservoirs.t23 = (1.0 + margin) *
                     (p.system.omega23() / p.system.omega13) *
                     p.reservoirs.t13;
  p.drive.omega_c = rng.log_uniform(1e3, 1e10);
  return p;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

CheckResult check_susceptibility(const EngineParams& params,
                                 std::uint64_t seed, std::uint64_t draws,
                                 double perturbation) {
  CheckResult result{"susceptibility-closed-form", false, 0.0, 1e-10, 0};
  Rng rng(seed);

  const auto compare = [&](const DerivedRates& rates, const DriveConfig& drive,
                           const AtomicSystem& system, double dw) {
    const double direct =
        cross_sections(dw, rates, drive, system).sigma_abs_norm;
    DerivedRates probe = rates;
    probe.gamma31 *= 1.0 + perturbation;
    const double oracle = susceptibility_absorption(dw, probe, drive);
    result.max_rel_dev = std::max(result.max_rel_dev, rel_dev(direct, oracle));
    ++result.samples;
  };

  // the configured operating point across the line
  const DerivedRates op_rates = derive_rates(params);
  for (const double m : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) {
    compare(op_rates, params.drive, params.system, m * op_rates.gamma31);
    if (m > 0.0) {
      compare(op_rates, params.drive, params.system, -m * op_rates.gamma31);
    }
  }

  // random widths, drives and detunings; the comparison is pure algebra in
  // (gamma21, gamma31, omega_c, dw), the rest only feeds the emission line
  for (std::uint64_t i = 0; i < draws; ++i) {
    DerivedRates rates;
    rates.gamma21 = rng.log_uniform(1e2, 1e10);
    rates.gamma31 = rng.log_uniform(1e2, 1e10);
    rates.gamma32 = rng.log_uniform(1e2, 1e10);
    rates.r23 = 0.5 * rates.gamma21;
    rates.r13 = 0.5 * rates.gamma21;
    rates.nbar13 = 0.01;
    rates.nbar23 = 0.02;
    DriveConfig drive;
    drive.omega_c = (rng.uniform01() < 0.1)
                        ? 0.0
                        : rng.log_uniform(1e2, 1e10);
    AtomicSystem system;
    system.gamma31 = rates.gamma31 / 10.0;
    system.gamma32 = rates.gamma32 / 10.0;
    system.omega13 = 4e15;
    system.omega12 = 1e15;
    const double dw =
        rng.sign() * rng.log_uniform(1e-3, 1e5) * rates.gamma31;
    compare(rates, drive, system, dw);
  }

  result.pass = result.max_rel_dev <= result.tolerance;
  return result;
}

CheckResult check_liouvillian(const EngineParams& params,
                              double perturbation) {
  CheckResult result{"liouvillian-closed-form", false, 0.0, 1e-10, 0};
  const DerivedRates rates = derive_rates(params);
  for (const double oc : {0.0, params.drive.omega_c, 1e12}) {
    DriveConfig drive;
    drive.omega_c = oc;
    const double closed =
        lambda_ratio(rates, drive, params.system) * (1.0 + perturbation);
    const double solved =
        liouvillian_steady_state(rates, drive, params.system).lambda;
    result.max_rel_dev = std::max(result.max_rel_dev, rel_dev(closed, solved));
    ++result.samples;
  }
  result.pass = result.max_rel_dev <= result.tolerance;
  return result;
}

CheckResult check_liouvillian_limit(const EngineParams& params) {
  CheckResult result{"liouvillian-strong-coupling-limit", false, 0.0, 1e-6, 0};
  const DerivedRates rates = derive_rates(params);
  DriveConfig drive;
  drive.omega_c = 1e12;  // far above every rate of the operating point
  const double solved =
      liouvillian_steady_state(rates, drive, params.system).lambda;
  const double limit =
      2.0 * rates.r13 / (params.system.gamma31 + rates.r13);
  result.max_rel_dev = rel_dev(solved, limit);
  result.samples = 1;
  result.pass = result.max_rel_dev <= result.tolerance;
  return result;
}

CheckResult check_transfer_integrator(const EngineParams& params,
                                      std::uint64_t seed,
                                      std::uint64_t draws) {
  CheckResult result{"transfer-integrator", false, 0.0, 1e-8, 0};
  Rng rng(seed);

  const auto compare = [&](const TransferCoefficients& c, double z) {
    const double numeric = integrate_transfer_channel(c, z);
    const double closed = analytic_transfer(c, z);
    result.max_rel_dev = std::max(result.max_rel_dev, rel_dev(numeric, closed));
    ++result.samples;
  };

  // physical channels of the operating point
  const DerivedRates rates = derive_rates(params);
  Sigma0Spec lifetime;
  const MediumConfig medium =
      medium_from_depth(10.0, DepthConvention::kEit, params, lifetime);
  for (const double m : {0.0, 1.0, 10.0}) {
    const CrossSections xs = cross_sections(m * rates.gamma31, rates,
                                            params.drive, params.system);
    const SteadyState steady =
        populations(rates, params.drive, params.system);
    const TransferCoefficients c = transfer_coefficients(
        xs, steady, sigma0(lifetime, params.system, rates), medium);
    compare(c, medium.length);
    compare(c, 0.5 * medium.length);
  }

  // synthetic channels spanning decaying, amplifying and near-transparent
  // regimes; every third draw pins alpha*z below 1e-6
  for (std::uint64_t i = 0; i < draws; ++i) {
    TransferCoefficients c;
    const double z = rng.log_uniform(1e-6, 1e2);
    c.source = rng.log_uniform(1e-12, 1e2);
    if (i % 3 == 0) {
      c.alpha = rng.sign() * rng.log_uniform(1e-12, 1e-6) / z;
    } else {
      c.alpha = rng.sign() * rng.log_uniform(1e-4, 1e1) / z;
    }
    compare(c, z);
  }

  result.pass = result.max_rel_dev <= result.tolerance;
  return result;
}

CheckResult check_temperature_identity(std::uint64_t seed,
                                       std::uint64_t draws,
                                       double perturbation) {
  CheckResult result{"brightness-temperature-identity", false, 0.0, 1e-12, 0};
  Rng rng(seed);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const EngineParams p = thermal_draw(rng);
    const DerivedRates rates = derive_rates(p);
    const BrightnessCeiling ceiling = brightness_ceiling(rates, p.system);
    const double bound =
        second_law_bound(p.reservoirs, p.system) * (1.0 + perturbation);
    result.max_rel_dev =
        std::max(result.max_rel_dev, rel_dev(ceiling.t_max, bound));
    ++result.samples;
  }
  result.pass = result.max_rel_dev <= result.tolerance;
  return result;
}

CheckResult check_line_center_consistency(std::uint64_t seed,
                                          std::uint64_t draws) {
  CheckResult result{"line-center-consistency", false, 0.0, 1e-9, 0};
  Rng rng(seed);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const EngineParams p = thermal_draw(rng);
    const DerivedRates rates = derive_rates(p);
    const double direct = line_center_brightness(rates, p.drive, p.system);
    const SteadyState steady = populations(rates, p.drive, p.system);
    const CrossSections xs =
        cross_sections(0.0, rates, p.drive, p.system);
    const double assembled =
        saturated_brightness(xs, steady, rates).b;
    result.max_rel_dev =
        std::max(result.max_rel_dev, rel_dev(direct, assembled));
    ++result.samples;
  }
  result.pass = result.max_rel_dev <= result.tolerance;
  return result;
}

CheckResult check_detailed_balance(const EngineParams& params,
                                   std::uint64_t seed, std::uint64_t draws) {
  CheckResult result{"detailed-balance", false, 0.0, 1e-10, 0};
  Rng rng(seed);
  EngineParams undriven = params;
  undriven.drive.omega_c = 0.0;
  const DerivedRates rates = derive_rates(undriven);
  const SteadyState steady =
      populations(rates, undriven.drive, undriven.system);
  for (std::uint64_t i = 0; i < draws + 1; ++i) {
    const double dw =
        (i == 0) ? 0.0
                 : rng.sign() * rng.log_uniform(1e-3, 1e5) * rates.gamma31;
    const CrossSections xs =
        cross_sections(dw, rates, undriven.drive, undriven.system);
    const double b = saturated_brightness(xs, steady, rates).b;
    result.max_rel_dev =
        std::max(result.max_rel_dev, rel_dev(b, rates.nbar13));
    ++result.samples;
  }
  result.pass = result.max_rel_dev <= result.tolerance;
  return result;
}

CheckResult check_rate_identity(std::uint64_t seed, std::uint64_t draws) {
  CheckResult result{"rate-identities", false, 0.0, 1e-12, 0};
  Rng rng(seed);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const EngineParams p = thermal_draw(rng);
    const DerivedRates rates = derive_rates(p);
    result.max_rel_dev = std::max(
        result.max_rel_dev, rel_dev(rates.gamma21, rates.r13 + rates.r23));
    // Boltzmann factor identity of the occupation numbers
    const double x13 = constants::hbar * p.system.omega13 /
                       (constants::k_b * p.reservoirs.t13);
    result.max_rel_dev = std::max(
        result.max_rel_dev,
        rel_dev(rates.nbar13 / (rates.nbar13 + 1.0), std::exp(-x13)));
    ++result.samples;
  }
  result.pass = result.max_rel_dev <= result.tolerance;
  return result;
}

VerifyReport run_verification(const EngineParams& params, std::uint64_t seed) {
  // decorrelated per-check seeds so checks can be reordered or rerun alone
  constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  VerifyReport report;
  report.seed = seed;
  report.checks.push_back(
      check_susceptibility(params, seed + 1 * kGolden, 1000));
  report.checks.push_back(check_liouvillian(params));
  report.checks.push_back(check_liouvillian_limit(params));
  report.checks.push_back(
      check_transfer_integrator(params, seed + 2 * kGolden, 500));
  report.checks.push_back(
      check_temperature_identity(seed + 3 * kGolden, 2000));
  report.checks.push_back(
      check_line_center_consistency(seed + 4 * kGolden, 1000));
  report.checks.push_back(
      check_detailed_balance(params, seed + 5 * kGolden, 500));
  report.checks.push_back(check_rate_identity(seed + 6 * kGolden, 2000));
  return report;
}

}  // namespace eitengine
