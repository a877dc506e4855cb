#pragma once

// Internal units: hbar = 1 and the driven transition frequency w0 = 1.
// Energies are multiples of hbar*w0, rates multiples of w0, times of 1/w0.
// Physical constants below are SI (or eV where noted) and are only used at
// the boundary where user parameters are converted.

#include <numbers>

namespace qpulse::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kBoltzmannEv = 8.617333262e-5;      // eV / K
inline constexpr double kHbarSi = 1.054571817e-34;          // J s
inline constexpr double kSpeedOfLight = 2.99792458e8;       // m / s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F / m
inline constexpr double kElementaryCharge = 1.602176634e-19;     // C
inline constexpr double kDebye = 3.33564e-30;                    // C m

// One carrier period in internal time units.
inline constexpr double kCarrierPeriod = kTwoPi;

}  // namespace qpulse::units
