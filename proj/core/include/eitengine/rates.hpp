#pragma once

#include "eitengine/params.hpp"

namespace eitengine {

// Incoherent pumping and dephasing rates induced by the thermal reservoirs.
// gamma31/gamma32/gamma21 here are coherence (dephasing) widths, distinct
// from the spontaneous rates in AtomicSystem that share their names.
struct DerivedRates {
  double nbar13 = 0.0;   // photon occupation at omega13, T13
  double nbar23 = 0.0;   // photon occupation at omega23, T23
  double r13 = 0.0;      // pumping rate 1<->3 (rad/s)
  double r23 = 0.0;      // pumping rate 2<->3 (rad/s)
  double gamma21 = 0.0;  // 1-2 dephasing width (rad/s)
  double gamma31 = 0.0;  // 1-3 dephasing width (rad/s)
  double gamma32 = 0.0;  // 2-3 dephasing width (rad/s)
};

// Planck occupation 1/(exp(hbar*omega/(k_b*t)) - 1). Requires omega > 0,
// t > 0. Stable for hbar*omega >> k_b*t (underflows cleanly to 0).
double occupation_number(double omega, double t);

// Pumping rates r_ij = gamma_ij * nbar_ij and the dephasing widths
//   gamma21 = r23 + r13
//   gamma31 = g31 + g32 + r23 + 2 r13
//   gamma32 = g31 + g32 + r13 + 2 r23
// where g31, g32 are the spontaneous rates.
DerivedRates derive_rates(const EngineParams& params);

}  // namespace eitengine
