#include <cmath>
#include <random>

#include "anchors.hpp"
#include "doctest.h"
#include "eitengine/errors.hpp"
#include "eitengine/transfer.hpp"

using namespace eitengine;
using doctest::Approx;

namespace {

Sigma0Spec unit_sigma0() {
  Sigma0Spec s;
  s.mode = Sigma0Spec::Mode::kExplicit;
  s.value = 1.0;
  return s;
}

}  // namespace

TEST_CASE("medium density reproduces the requested optical depth") {
  const EngineParams p = reference_params();
  const DerivedRates r = derive_rates(p);
  const SteadyState ss = populations(r, p.drive, p.system);
  Sigma0Spec spec;  // lifetime broadened

  for (double depth : {0.5, 10.0, 200.0}) {
    const MediumConfig eit =
        medium_from_depth(depth, DepthConvention::kEit, p, spec, 2.0);
    CHECK(eit.length == 2.0);
    const CrossSections xs0 = cross_sections(0.0, r, p.drive, p.system);
    const double s0 = sigma0(spec, p.system, r);
    const TransferCoefficients c =
        transfer_coefficients(xs0, ss, s0, eit);
    // alpha + source is the pure absorption part N sigma_abs rho11
    CHECK((c.alpha + c.source) * eit.length == Approx(depth).epsilon(1e-13));

    const MediumConfig bare =
        medium_from_depth(depth, DepthConvention::kBare, p, spec, 2.0);
    const TransferCoefficients cb =
        transfer_coefficients(xs0, ss, s0, bare);
    CHECK((cb.alpha + cb.source) * bare.length ==
          Approx(depth * xs0.sigma_abs_norm).epsilon(1e-13));
    CHECK(bare.density < eit.density);  // suppressed line needs more atoms
  }
}

TEST_CASE("transfer coefficients at the frozen operating point") {
  const EngineParams p = reference_params();
  const DerivedRates r = derive_rates(p);
  const SteadyState ss = populations(r, p.drive, p.system);
  const Sigma0Spec unit = unit_sigma0();
  const MediumConfig m =
      medium_from_depth(10.0, DepthConvention::kEit, p, unit);

  const CrossSections xs0 = cross_sections(0.0, r, p.drive, p.system);
  const TransferCoefficients c0 = transfer_coefficients(xs0, ss, 1.0, m);
  CHECK(c0.alpha * m.length == Approx(anchors::kAlphaLCenter).epsilon(1e-13));

  const CrossSections xst =
      cross_sections(10.0 * r.gamma31, r, p.drive, p.system);
  const TransferCoefficients ct = transfer_coefficients(xst, ss, 1.0, m);
  CHECK(ct.alpha * m.length == Approx(anchors::kAlphaLTail).epsilon(1e-13));

  CHECK(analytic_transfer(c0, m.length) ==
        Approx(anchors::kBExitCenter).epsilon(1e-13));
  CHECK(analytic_transfer(ct, m.length) ==
        Approx(anchors::kBExitTail).epsilon(1e-13));
}

TEST_CASE("closed-form transfer is exact in its limits") {
  TransferCoefficients c;

  SUBCASE("zero net absorption grows linearly") {
    c.alpha = 0.0;
    c.source = 3.5;
    CHECK(analytic_transfer(c, 2.0) == 7.0);
  }

  SUBCASE("continuous through alpha = 0") {
    c.source = 3.5;
    c.alpha = 1e-12;
    const double plus = analytic_transfer(c, 2.0);
    c.alpha = -1e-12;
    const double minus = analytic_transfer(c, 2.0);
    CHECK(plus == Approx(7.0).epsilon(1e-11));
    CHECK(minus == Approx(7.0).epsilon(1e-11));
    CHECK(minus > plus);  // gain branch sits above the lossy branch
  }

  SUBCASE("deep medium saturates to source/alpha") {
    c.alpha = 4.0;
    c.source = 1.3;
    CHECK(analytic_transfer(c, 300.0) == Approx(1.3 / 4.0).epsilon(1e-15));
  }

  SUBCASE("zero path length emits nothing") {
    c.alpha = 4.0;
    c.source = 1.3;
    CHECK(analytic_transfer(c, 0.0) == 0.0);
    CHECK_THROWS_AS(analytic_transfer(c, -1.0), DomainError);
  }
}

TEST_CASE("saturation of the transfer solution is the spectral brightness") {
  const EngineParams p = reference_params();
  const DerivedRates r = derive_rates(p);
  const SteadyState ss = populations(r, p.drive, p.system);
  const MediumConfig m =
      medium_from_depth(10.0, DepthConvention::kEit, p, unit_sigma0());
  for (double mdw : {0.0, 1.0, 4.0}) {
    const CrossSections xs =
        cross_sections(mdw * r.gamma31, r, p.drive, p.system);
    const TransferCoefficients c = transfer_coefficients(xs, ss, 1.0, m);
    const BrightnessPoint b = saturated_brightness(xs, ss, r);
    CHECK(c.source / c.alpha == Approx(b.b).epsilon(1e-12));
  }
}

TEST_CASE("numeric integration agrees with the closed form") {
  const EngineParams p = reference_params();
  const DerivedRates r = derive_rates(p);
  const Sigma0Spec unit = unit_sigma0();
  const MediumConfig m =
      medium_from_depth(10.0, DepthConvention::kEit, p, unit);
  const std::vector<double> grid = {0.0,
                                    0.5 * r.gamma31,
                                    -0.5 * r.gamma31,
                                    2.0 * r.gamma31,
                                    10.0 * r.gamma31,
                                    40.0 * r.gamma31};

  const TransferField numeric = integrate_transfer(grid, m, p, unit, 7);
  const TransferField analytic = analytic_transfer_field(grid, m, p, unit, 7);

  REQUIRE(numeric.z.size() == 7);
  REQUIRE(numeric.brightness.size() == grid.size());
  CHECK(numeric.z.front() == 0.0);
  CHECK(numeric.z.back() == m.length);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(numeric.amplifying[i] == 0);
    CHECK(numeric.brightness[i].front() == 0.0);
    for (std::size_t k = 0; k < numeric.z.size(); ++k) {
      CHECK(anchors::rel_err(numeric.brightness[i][k],
                             analytic.brightness[i][k]) < 1e-8);
    }
    // brightness builds up monotonically toward saturation; deep channels
    // hit the double-precision fixed point and go exactly flat
    CHECK(analytic.brightness[i][1] > 0.0);
    for (std::size_t k = 1; k < numeric.z.size(); ++k) {
      CHECK(analytic.brightness[i][k] >= analytic.brightness[i][k - 1]);
    }
    const double saturated =
        analytic.coefficients[i].source / analytic.coefficients[i].alpha;
    CHECK(analytic.brightness[i].back() <= saturated * (1.0 + 1e-12));
  }
}

TEST_CASE("single-channel integrator handles extreme depths") {
  TransferCoefficients c;

  // essentially transparent: alpha z ~ 1e-8
  c.alpha = 1e-8;
  c.source = 2.0;
  CHECK(anchors::rel_err(integrate_transfer_channel(c, 1.0),
                         analytic_transfer(c, 1.0)) < 1e-8);

  // deep saturation
  c.alpha = 50.0;
  c.source = 0.7;
  CHECK(anchors::rel_err(integrate_transfer_channel(c, 1.0),
                         analytic_transfer(c, 1.0)) < 1e-8);

  // amplifying branch
  c.alpha = -3.0;
  c.source = 0.1;
  CHECK(anchors::rel_err(integrate_transfer_channel(c, 1.0),
                         analytic_transfer(c, 1.0)) < 1e-8);
}

TEST_CASE("amplifying channels are flagged and keep growing") {
  EngineParams p = reference_params();
  p.reservoirs.t23 = 4000.0;  // inverted
  MediumConfig m;
  m.density = 1.0;
  m.length = 1.0;
  const Sigma0Spec unit = unit_sigma0();
  const TransferField f = integrate_transfer({0.0}, m, p, unit, 5);
  CHECK(f.amplifying[0] == 1);
  CHECK(f.coefficients[0].alpha < 0.0);
  const auto& row = f.brightness[0];
  const double linear = f.coefficients[0].source * f.z.back();
  CHECK(row.back() > linear);  // above the zero-alpha growth
}

TEST_CASE("peak-to-wing contrast of the emerging line") {
  const EngineParams p = reference_params();

  const TailRatio eit = tail_ratio(p);
  CHECK(eit.ratio == Approx(anchors::kTailRatioDriven).epsilon(1e-12));
  CHECK(eit.b_peak == Approx(anchors::kBExitCenter).epsilon(1e-13));
  CHECK(eit.b_tail_plus == Approx(anchors::kBExitTail).epsilon(1e-13));
  CHECK(eit.b_tail_plus == eit.b_tail_minus);

  const TailRatio bare =
      tail_ratio(p, 10.0, 10.0, DepthConvention::kBare);
  CHECK(bare.ratio == Approx(anchors::kTailRatioBare).epsilon(1e-12));

  // the contrast falls between two limits: the ratio of source densities
  // (thin medium) and the ratio of saturated brightnesses (thick medium),
  // and it decreases with depth because the wing saturates last
  const double thick_limit = anchors::kB0 / anchors::kBTail10;
  const TailRatio shallow = tail_ratio(p, 0.01);
  const TailRatio deeper = tail_ratio(p, 40.0);
  CHECK(deeper.ratio < eit.ratio);
  CHECK(eit.ratio < shallow.ratio);
  CHECK(deeper.ratio > thick_limit);
  const DerivedRates r = derive_rates(p);
  const CrossSections em0 = cross_sections(0.0, r, p.drive, p.system);
  const CrossSections emt =
      cross_sections(10.0 * r.gamma31, r, p.drive, p.system);
  CHECK(shallow.ratio < em0.sigma_em_norm / emt.sigma_em_norm);

  CHECK_THROWS_AS(tail_ratio(p, 10.0, 0.0), DomainError);
  CHECK_THROWS_AS(tail_ratio(p, -2.0), DomainError);
}

TEST_CASE("transfer input validation") {
  const EngineParams p = reference_params();
  const Sigma0Spec unit = unit_sigma0();
  MediumConfig m;
  m.density = 1e15;
  m.length = 1.0;

  CHECK_THROWS_AS(integrate_transfer({0.0}, m, p, unit, 1), DomainError);

  MediumConfig bad = m;
  bad.density = 0.0;
  CHECK_THROWS_AS(integrate_transfer({0.0}, bad, p, unit, 5), DomainError);
  bad = m;
  bad.length = -1.0;
  CHECK_THROWS_AS(analytic_transfer_field({0.0}, bad, p, unit, 5),
                  DomainError);

  CHECK_THROWS_AS(
      medium_from_depth(0.0, DepthConvention::kEit, p, unit), DomainError);
  CHECK_THROWS_AS(
      medium_from_depth(10.0, DepthConvention::kEit, p, unit, 0.0),
      DomainError);
}
