#include <cmath>
#include <random>
#include <string>

#include "anchors.hpp"
#include "doctest.h"
#include "eitengine/brightness.hpp"
#include "eitengine/errors.hpp"

using namespace eitengine;
using doctest::Approx;

namespace {

struct Setup {
  EngineParams params;
  DerivedRates rates;
  SteadyState steady;
};

Setup make_setup(double t23 = 5778.0, double omega_c = 5e7) {
  Setup s;
  s.params = reference_params();
  s.params.reservoirs.t23 = t23;
  s.params.drive.omega_c = omega_c;
  s.rates = derive_rates(s.params);
  s.steady = populations(s.rates, s.params.drive, s.params.system);
  return s;
}

BrightnessPoint saturated_at(const Setup& s, double dw) {
  const CrossSections xs =
      cross_sections(dw, s.rates, s.params.drive, s.params.system);
  return saturated_brightness(xs, s.steady, s.rates);
}

}  // namespace

TEST_CASE("saturated brightness matches the frozen spectrum") {
  const Setup s = make_setup();
  const double g = s.rates.gamma31;

  const BrightnessPoint at0 = saturated_at(s, 0.0);
  CHECK(at0.b == Approx(anchors::kB0).epsilon(1e-13));
  CHECK(at0.b_normalized == Approx(anchors::kB0OverNbar13).epsilon(1e-13));
  CHECK(at0.detuning == 0.0);

  CHECK(saturated_at(s, g).b == Approx(anchors::kB1).epsilon(1e-13));
  CHECK(saturated_at(s, 2.0 * g).b == Approx(anchors::kB2).epsilon(1e-13));
  CHECK(saturated_at(s, 10.0 * g).b ==
        Approx(anchors::kBTail10).epsilon(1e-13));

  // even in detuning
  for (double m : {0.4, 1.0, 3.7, 10.0}) {
    CHECK(saturated_at(s, m * g).b == saturated_at(s, -m * g).b);
  }

  // the emerging line is a peak: center far above the wings
  CHECK(at0.b > 100.0 * saturated_at(s, 10.0 * g).b);
}

TEST_CASE("closed-form line center agrees with the spectral form") {
  const Setup s = make_setup();
  const double closed =
      line_center_brightness(s.rates, s.params.drive, s.params.system);
  CHECK(closed == Approx(anchors::kB0).epsilon(1e-13));
  CHECK(closed == Approx(saturated_at(s, 0.0).b).epsilon(1e-12));
}

TEST_CASE("strong-coupling limit") {
  const Setup s = make_setup();
  const double b_inf = strong_coupling_brightness(s.rates, s.params.system);
  CHECK(b_inf == Approx(anchors::kBInf).epsilon(1e-13));
  CHECK(b_inf / s.rates.nbar13 ==
        Approx(anchors::kBInfOverNbar13).epsilon(1e-13));

  // the full line-center form approaches it as the drive grows
  const Setup strong = make_setup(5778.0, 1e12);
  const double b_strong = line_center_brightness(
      strong.rates, strong.params.drive, strong.params.system);
  CHECK(b_strong == Approx(anchors::kBAtOmegaC1e12).epsilon(1e-12));
  CHECK(anchors::rel_err(b_strong, b_inf) < 2e-10);
}

TEST_CASE("drive off means detailed balance at every detuning") {
  const Setup s = make_setup(5778.0, 0.0);
  for (double m : {0.0, 0.3, 1.0, 3.7, 20.0}) {
    const BrightnessPoint b = saturated_at(s, m * s.rates.gamma31);
    CHECK(b.b == Approx(s.rates.nbar13).epsilon(1e-12));
    CHECK(b.b_normalized == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("brightness temperature round trip") {
  const EngineParams p = reference_params();
  const double w = p.system.omega13;

  CHECK(brightness_to_temperature(anchors::kB0, w) ==
        Approx(anchors::kTAtB0).epsilon(1e-13));
  CHECK(brightness_to_temperature(anchors::kB0, w) / p.reservoirs.t13 ==
        Approx(anchors::kTAtB0OverT13).epsilon(1e-13));
  CHECK(brightness_to_temperature(anchors::kBInf, w) / p.reservoirs.t13 ==
        Approx(anchors::kTAtBInfOverT13).epsilon(1e-13));

  // T(b = 1) is hbar omega / (k ln 2)
  CHECK(brightness_to_temperature(1.0, w) * std::log(2.0) ==
        Approx(anchors::kHbarOmega13OverKb).epsilon(1e-14));

  std::mt19937_64 eng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double b = std::pow(10.0, -12.0 + 18.0 * u(eng));
    const double t = brightness_to_temperature(b, w);
    CHECK(t > 0.0);
    CHECK(temperature_to_brightness(t, w) == Approx(b).epsilon(1e-12));
  }

  // hotter radiation is brighter
  CHECK(temperature_to_brightness(6000.0, w) >
        temperature_to_brightness(5000.0, w));
}

TEST_CASE("temperature conversion rejects nonphysical input") {
  CHECK_THROWS_AS(brightness_to_temperature(0.0, 4e15), DomainError);
  CHECK_THROWS_AS(brightness_to_temperature(-0.1, 4e15), DomainError);
  CHECK_THROWS_AS(brightness_to_temperature(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(brightness_to_temperature(0.5, -4e15), DomainError);
  CHECK_THROWS_AS(temperature_to_brightness(0.0, 4e15), DomainError);
}

TEST_CASE("inverted configurations are reported, not silently returned") {
  // a cold 2-3 reservoir drives the medium past the inversion threshold
  const Setup cold = make_setup(4000.0);

  try {
    line_center_brightness(cold.rates, cold.params.drive, cold.params.system);
    FAIL("expected ThresholdError");
  } catch (const ThresholdError& e) {
    CHECK(e.discriminant >= 0.0);
  }

  try {
    strong_coupling_brightness(cold.rates, cold.params.system);
    FAIL("expected ThresholdError");
  } catch (const ThresholdError& e) {
    CHECK(e.discriminant <= 0.0);
  }

  try {
    saturated_at(cold, 0.0);
    FAIL("expected GainMediumError");
  } catch (const GainMediumError& e) {
    CHECK(std::string(e.what()).find("amplifies") != std::string::npos);
  }

  // far enough into the wing the medium still absorbs
  const BrightnessPoint wing = saturated_at(cold, 40.0 * cold.rates.gamma31);
  CHECK(wing.b > 0.0);
}
