#pragma once

#include <numbers>

namespace eitqc::constants {

// CODATA 2018.
inline constexpr double c = 299792458.0;                  // m/s
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double e = 1.602176634e-19;              // C
inline constexpr double a0 = 5.29177210903e-11;           // m
inline constexpr double epsilon0 = 8.8541878128e-12;      // F/m
inline constexpr double mu_B = 9.2740100783e-24;          // J/T

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace eitqc::constants
