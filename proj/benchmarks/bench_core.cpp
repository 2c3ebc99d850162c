// Microbenchmarks for the hot paths: rate derivation, the driven cross
// sections, the dense steady-state solve, and both transfer routes.

#include <benchmark/benchmark.h>

#include "eitengine/eitengine.hpp"

using namespace eitengine;

namespace {

const EngineParams kParams = reference_params();
const DerivedRates kRates = derive_rates(kParams);
const SteadyState kSteady = populations(kRates, kParams.drive, kParams.system);

void bm_derive_rates(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_rates(kParams));
  }
}
BENCHMARK(bm_derive_rates);

void bm_cross_sections_center(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cross_sections(0.0, kRates, kParams.drive, kParams.system));
  }
}
BENCHMARK(bm_cross_sections_center);

void bm_cross_sections_wing(benchmark::State& state) {
  const double dw = 10.0 * kRates.gamma31;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cross_sections(dw, kRates, kParams.drive, kParams.system));
  }
}
BENCHMARK(bm_cross_sections_wing);

void bm_populations_closed_form(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        populations(kRates, kParams.drive, kParams.system));
  }
}
BENCHMARK(bm_populations_closed_form);

void bm_liouvillian_steady_state(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        liouvillian_steady_state(kRates, kParams.drive, kParams.system));
  }
}
BENCHMARK(bm_liouvillian_steady_state);

void bm_line_center_brightness(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        line_center_brightness(kRates, kParams.drive, kParams.system));
  }
}
BENCHMARK(bm_line_center_brightness);

void bm_transfer_analytic(benchmark::State& state) {
  const Sigma0Spec spec;
  const MediumConfig medium =
      medium_from_depth(10.0, DepthConvention::kEit, kParams, spec);
  const CrossSections xs =
      cross_sections(0.0, kRates, kParams.drive, kParams.system);
  const TransferCoefficients coeffs = transfer_coefficients(
      xs, kSteady, sigma0(spec, kParams.system, kRates), medium);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_transfer(coeffs, medium.length));
  }
}
BENCHMARK(bm_transfer_analytic);

void bm_transfer_integrator(benchmark::State& state) {
  const Sigma0Spec spec;
  const MediumConfig medium =
      medium_from_depth(10.0, DepthConvention::kEit, kParams, spec);
  const CrossSections xs =
      cross_sections(0.0, kRates, kParams.drive, kParams.system);
  const TransferCoefficients coeffs = transfer_coefficients(
      xs, kSteady, sigma0(spec, kParams.system, kRates), medium);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_transfer_channel(coeffs,
                                                        medium.length));
  }
}
BENCHMARK(bm_transfer_integrator);

void bm_tail_ratio(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tail_ratio(kParams));
  }
}
BENCHMARK(bm_tail_ratio);

}  // namespace

BENCHMARK_MAIN();
