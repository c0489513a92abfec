#pragma once

#include <numbers>

// CODATA 2018 values, SI units.
namespace semigrav::constants {

inline constexpr double G = 6.67430e-11;              // m^3 kg^-1 s^-2
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double k_B = 1.380649e-23;           // J/K
inline constexpr double c = 299792458.0;              // m/s
inline constexpr double amu = 1.66053906660e-27;      // kg
inline constexpr double angstrom = 1e-10;             // m
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double sqrt_pi = 1.7724538509055160273;

}  // namespace semigrav::constants
