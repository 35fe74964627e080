#pragma once

namespace qpkg::constants {

// CODATA 2018 (exact SI definitions where applicable)
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double h = 6.62607015e-34;        // Planck constant, J s
inline constexpr double hbar = h / (2.0 * pi);     // J s
inline constexpr double kB = 1.380649e-23;         // Boltzmann constant, J/K
inline constexpr double c = 299792458.0;           // vacuum speed of light, m/s
inline constexpr double eps0 = 8.8541878128e-12;   // vacuum permittivity, F/m

}  // namespace qpkg::constants
