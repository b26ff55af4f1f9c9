// constants.hpp — pinned physical constants used by every module.
//
// All values SI, CODATA 2018. Every module reads from this table; no
// constant may be redefined elsewhere.

#pragma once

#include <cstdint>

namespace catwig::constants {

inline constexpr double hbar = 1.054571817e-34;  // reduced Planck constant [J s]
inline constexpr double k_B = 1.380649000e-23;   // Boltzmann constant [J/K]
inline constexpr double G = 6.674300000e-11;     // gravitational constant [m^3 kg^-1 s^-2]
inline constexpr double c_light = 2.997924580e8; // speed of light [m/s]
inline constexpr double pi = 3.141592653589793;

// FNV-1a hash of the printed constants table; emitted by `catwig --version`
// so result fixtures are traceable to the constants they were produced with.
std::uint64_t table_hash();

} // namespace catwig::constants
