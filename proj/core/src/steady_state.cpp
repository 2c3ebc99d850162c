#include "eitengine/steady_state.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <sstream>

#include "eitengine/errors.hpp"

namespace eitengine {

namespace {

void check_not_degenerate(const DerivedRates& rates,
                          const DriveConfig& drive) {
  if (drive.omega_c == 0.0 && rates.r23 == 0.0) {
    throw DegenerateInputError(
        "steady state undefined: omega_c and r23 both vanish, so the "
        "denominator factor omega_c^2 + gamma32*r23 is zero");
  }
}

using Matrix3c = Eigen::Matrix3cd;
using complexd = std::complex<double>;

// Dissipator of a single jump operator: C rho C^+ - (1/2){C^+C, rho}.
Matrix3c dissipator(const Matrix3c& c, const Matrix3c& rho) {
  const Matrix3c cdc = c.adjoint() * c;
  return c * rho * c.adjoint() - 0.5 * (cdc * rho + rho * cdc);
}

// Packs the 9 real degrees of freedom of a Hermitian 3x3 matrix:
// populations first, then Re/Im of the upper-triangle coherences.
Eigen::Matrix<double, 9, 1> pack(const Matrix3c& rho) {
  Eigen::Matrix<double, 9, 1> x;
  x << rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(),
      rho(0, 1).real(), rho(0, 1).imag(), rho(0, 2).real(),
      rho(0, 2).imag(), rho(1, 2).real(), rho(1, 2).imag();
  return x;
}

Matrix3c unpack(const Eigen::Matrix<double, 9, 1>& x) {
  Matrix3c rho;
  rho(0, 0) = x(0);
  rho(1, 1) = x(1);
  rho(2, 2) = x(2);
  rho(0, 1) = complexd(x(3), x(4));
  rho(1, 0) = std::conj(rho(0, 1));
  rho(0, 2) = complexd(x(5), x(6));
  rho(2, 0) = std::conj(rho(0, 2));
  rho(1, 2) = complexd(x(7), x(8));
  rho(2, 1) = std::conj(rho(1, 2));
  return rho;
}

}  // namespace

double lambda_ratio(const DerivedRates& rates, const DriveConfig& drive,
                    const AtomicSystem& system) {
  check_not_degenerate(rates, drive);
  const double oc2 = drive.omega_c * drive.omega_c;
  const double num =
      rates.r13 * (2.0 * oc2 + rates.gamma32 * (system.gamma32 + 2.0 * rates.r23));
  const double den =
      (system.gamma31 + rates.r13) * (oc2 + rates.gamma32 * rates.r23);
  return num / den;
}

SteadyState populations(const DerivedRates& rates, const DriveConfig& drive,
                        const AtomicSystem& system) {
  check_not_degenerate(rates, drive);
  const double oc2 = drive.omega_c * drive.omega_c;
  const double a = rates.r13 / (system.gamma31 + rates.r13);
  const double q = (rates.gamma32 * (system.gamma32 + rates.r23) + oc2) /
                   (rates.gamma32 * rates.r23 + oc2);
  SteadyState s;
  s.rho11 = 1.0 / (1.0 + a * (1.0 + q));
  s.rho33 = a * s.rho11;
  s.rho22 = q * s.rho33;
  s.lambda = (s.rho22 + s.rho33) / s.rho11;
  return s;
}

SteadyState liouvillian_steady_state(const DerivedRates& rates,
                                     const DriveConfig& drive,
                                     const AtomicSystem& system) {
  check_not_degenerate(rates, drive);

  // Nondimensionalize by the largest rate; the kernel is scale invariant.
  const double scale =
      std::max({system.gamma31, system.gamma32, rates.r13, rates.r23,
                drive.omega_c});
  const double g31 = system.gamma31 / scale;
  const double g32 = system.gamma32 / scale;
  const double r13 = rates.r13 / scale;
  const double r23 = rates.r23 / scale;
  const double oc = drive.omega_c / scale;

  Matrix3c h = Matrix3c::Zero();
  h(1, 2) = 0.5 * oc;
  h(2, 1) = 0.5 * oc;

  Matrix3c down31 = Matrix3c::Zero();  // |1><3|, spontaneous + stimulated
  down31(0, 2) = std::sqrt(g31 + r13);
  Matrix3c down32 = Matrix3c::Zero();  // |2><3|
  down32(1, 2) = std::sqrt(g32 + r23);
  Matrix3c up13 = Matrix3c::Zero();  // |3><1|, thermal pumping
  up13(2, 0) = std::sqrt(r13);
  Matrix3c up23 = Matrix3c::Zero();  // |3><2|
  up23(2, 1) = std::sqrt(r23);

  const auto rhs = [&](const Matrix3c& rho) {
    const complexd i(0.0, 1.0);
    Matrix3c out = -i * (h * rho - rho * h);
    out += dissipator(down31, rho);
    out += dissipator(down32, rho);
    out += dissipator(up13, rho);
    out += dissipator(up23, rho);
    return out;
  };

  // Generator in the 9 real coordinates, one basis vector at a time.
  Eigen::Matrix<double, 9, 9> a;
  for (int k = 0; k < 9; ++k) {
    Eigen::Matrix<double, 9, 1> e = Eigen::Matrix<double, 9, 1>::Zero();
    e(k) = 1.0;
    a.col(k) = pack(rhs(unpack(e)));
  }

  // Trace constraint replaces the redundant rho11 balance.
  Eigen::Matrix<double, 9, 9> a_solve = a;
  a_solve.row(0) << 1, 1, 1, 0, 0, 0, 0, 0, 0;
  Eigen::Matrix<double, 9, 1> b = Eigen::Matrix<double, 9, 1>::Zero();
  b(0) = 1.0;

  const Eigen::PartialPivLU<Eigen::Matrix<double, 9, 9>> lu(a_solve);
  Eigen::Matrix<double, 9, 1> x = lu.solve(b);
  // one step of iterative refinement; the coupling can exceed the rates by
  // several orders and this recovers the lost digits
  x += lu.solve(b - a_solve * x);

  const double residual = (a_solve * x - b).norm();
  if (!x.allFinite() || residual > 1e-9) {
    const Eigen::JacobiSVD<Eigen::Matrix<double, 9, 9>> svd(a_solve);
    const double smin = svd.singularValues()(8);
    const double smax = svd.singularValues()(0);
    std::ostringstream msg;
    msg << "steady-state solve is numerically singular: residual "
        << residual << ", condition estimate "
        << (smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity());
    throw NumericalError(msg.str());
  }

  SteadyState s;
  s.rho11 = x(0);
  s.rho22 = x(1);
  s.rho33 = x(2);
  if (!(s.rho11 > 0.0)) {
    throw NumericalError(
        "steady-state solve produced a nonpositive ground population");
  }
  s.lambda = (s.rho22 + s.rho33) / s.rho11;
  return s;
}

}  // namespace eitengine
