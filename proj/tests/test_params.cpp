#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "eitengine/errors.hpp"
#include "eitengine/params.hpp"

using namespace eitengine;

namespace {

bool has_code(const ValidationReport& report, const std::string& code) {
  for (const auto& issue : report.issues) {
    if (issue.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("reference parameter set") {
  const EngineParams p = reference_params();
  CHECK(p.system.gamma31 == 1e7);
  CHECK(p.system.gamma32 == 6e7);
  CHECK(p.system.omega13 == 4e15);
  CHECK(p.system.omega12 == 1e15);
  CHECK(p.system.omega23() == 3e15);
  CHECK(!p.system.dipole13.has_value());
  CHECK(p.reservoirs.t13 == 5778.0);
  CHECK(p.reservoirs.t23 == 5778.0);
  CHECK(p.drive.omega_c == 5e7);
  CHECK(validate(p).ok());
  CHECK(validate(p).summary().empty());
  CHECK_NOTHROW(require_valid(p));
}

TEST_CASE("validation flags each broken field") {
  EngineParams p = reference_params();

  SUBCASE("nonpositive rates") {
    p.system.gamma31 = 0.0;
    p.system.gamma32 = -1.0;
    const auto report = validate(p);
    CHECK(!report.ok());
    CHECK(has_code(report, "gamma31.nonpositive"));
    CHECK(has_code(report, "gamma32.nonpositive"));
  }

  SUBCASE("nonfinite values") {
    p.system.omega13 = std::numeric_limits<double>::quiet_NaN();
    p.reservoirs.t13 = std::numeric_limits<double>::infinity();
    const auto report = validate(p);
    CHECK(has_code(report, "omega13.nonfinite"));
    CHECK(has_code(report, "t13.nonfinite"));
  }

  SUBCASE("level ordering") {
    p.system.omega12 = p.system.omega13;
    CHECK(has_code(validate(p), "omega13.order"));
    p.system.omega12 = 2.0 * p.system.omega13;
    CHECK(has_code(validate(p), "omega13.order"));
  }

  SUBCASE("drive sign") {
    p.drive.omega_c = -1.0;
    CHECK(has_code(validate(p), "omega_c.negative"));
    p.drive.omega_c = 0.0;
    CHECK(validate(p).ok());
  }

  SUBCASE("temperatures") {
    p.reservoirs.t23 = 0.0;
    CHECK(has_code(validate(p), "t23.nonpositive"));
  }

  SUBCASE("optional dipole") {
    p.system.dipole13 = 0.0;
    CHECK(has_code(validate(p), "dipole13.nonpositive"));
    p.system.dipole13 = std::numeric_limits<double>::quiet_NaN();
    CHECK(has_code(validate(p), "dipole13.nonfinite"));
    p.system.dipole13 = 1e-29;
    CHECK(validate(p).ok());
  }
}

TEST_CASE("validation collects every issue at once") {
  EngineParams p;  // all zero
  const auto report = validate(p);
  CHECK(report.issues.size() >= 5);
  CHECK(has_code(report, "gamma31.nonpositive"));
  CHECK(has_code(report, "gamma32.nonpositive"));
  CHECK(has_code(report, "omega13.nonpositive"));
  CHECK(has_code(report, "t13.nonpositive"));
  CHECK(has_code(report, "t23.nonpositive"));
  const std::string summary = report.summary();
  CHECK(summary.find("gamma31.nonpositive") != std::string::npos);
  CHECK(summary.find(", ") != std::string::npos);
}

TEST_CASE("require_valid throws with the issue codes in the message") {
  EngineParams p = reference_params();
  p.system.omega12 = 5e15;
  try {
    require_valid(p);
    FAIL("expected InvalidParamsError");
  } catch (const InvalidParamsError& e) {
    CHECK(std::string(e.what()).find("omega13.order") != std::string::npos);
  }
}
