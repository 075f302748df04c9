#pragma once

#include <numbers>

namespace pointerlab::constants {

// CODATA 2018 SI values.
inline constexpr double planck = 6.62607015e-34;           // J s
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double light_speed = 299792458.0;         // m / s
inline constexpr double boltzmann = 1.380649e-23;          // J / K

// Electron Compton wavelength rounded to 2.4 pm. The scattering shifts and
// the solved maximal parameters are quoted against this rounded value, so it
// is pinned here instead of being derived from h / (m_e c).
inline constexpr double compton_wavelength_e = 2.4e-12;    // m

}  // namespace pointerlab::constants
