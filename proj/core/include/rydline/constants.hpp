#pragma once

// Unit conversions out of Hartree atomic units. Everything inside the
// library is atomic units; conversions happen only at the I/O boundary.
namespace rydline::constants {

inline constexpr double hartree_to_ghz = 6.579683920502e6;
inline constexpr double au_dipole_to_debye = 2.541746;
inline constexpr double amu_to_electron_mass = 1822.888486209;

} // namespace rydline::constants
