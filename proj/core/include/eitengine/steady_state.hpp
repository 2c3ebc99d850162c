#pragma once

#include "eitengine/params.hpp"
#include "eitengine/rates.hpp"

namespace eitengine {

struct SteadyState {
  double rho11 = 0.0;
  double rho22 = 0.0;
  double rho33 = 0.0;
  double lambda = 0.0;  // (rho22 + rho33) / rho11
};

// Closed-form upper-manifold fraction
//   Lambda = r13 (2 Oc^2 + gamma32 (g32 + 2 r23))
//          / ((g31 + r13)(Oc^2 + gamma32 r23))
// Throws DegenerateInputError when omega_c and r23 are both zero (the
// denominator factor Oc^2 + gamma32*r23 vanishes).
double lambda_ratio(const DerivedRates& rates, const DriveConfig& drive,
                    const AtomicSystem& system);

// Closed-form steady state. rho33/rho11 = r13/(g31 + r13) comes from the
// 1-3 balance alone; the 2-3 balance fixes rho22/rho33; the trace fixes
// the scale. lambda equals lambda_ratio to roundoff.
SteadyState populations(const DerivedRates& rates, const DriveConfig& drive,
                        const AtomicSystem& system);

// Brute-force cross-check: builds the full 9x9 real generator of the
// dissipative three-level model (bidirectional thermal rates plus
// spontaneous decay as jump operators, resonant coupling on 2-3 as the
// Hamiltonian), replaces one balance row with the trace constraint and
// solves by dense partially pivoted LU. Independent of the closed forms
// above. Throws NumericalError with a condition estimate if the system is
// numerically singular.
SteadyState liouvillian_steady_state(const DerivedRates& rates,
                                     const DriveConfig& drive,
                                     const AtomicSystem& system);

}  // namespace eitengine
