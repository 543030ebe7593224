#pragma once

// Physical constants. The interaction formulas are carried out in Gaussian-CGS
// units internally (polarizability as a volume, intensity as power flux);
// user-facing quantities are SI (W/cm^2, nm, Hz).
namespace latpair::constants {

inline constexpr double pi = 3.14159265358979323846;

// CGS
inline constexpr double c_cgs    = 2.99792458e10;    // cm/s
inline constexpr double hbar_cgs = 1.054571817e-27;  // erg s
inline constexpr double h_cgs    = 6.62607015e-27;   // erg s

// SI
inline constexpr double c_si    = 2.99792458e8;      // m/s
inline constexpr double hbar_si = 1.054571817e-34;   // J s
inline constexpr double h_si    = 6.62607015e-34;    // J s
inline constexpr double amu_kg  = 1.66053906660e-27; // kg

// conversions
inline constexpr double erg_per_joule = 1.0e7;
inline constexpr double cm_per_m      = 1.0e2;
// 1 W/cm^2 = 1e7 erg/(s cm^2)
inline constexpr double cgs_flux_per_W_cm2 = 1.0e7;

}  // namespace latpair::constants
