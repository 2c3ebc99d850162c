#pragma once

namespace eitengine {

// CODATA 2018. All frequencies in this library are angular (rad/s),
// temperatures are in kelvin, lengths in meters, energies in joules.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double k_b = 1.380649e-23;         // J/K
inline constexpr double c = 2.99792458e8;           // m/s
inline constexpr double epsilon0 = 8.8541878128e-12; // F/m
inline constexpr char revision[] = "CODATA-2018";
}  // namespace constants

}  // namespace eitengine
