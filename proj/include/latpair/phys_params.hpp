#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

// Atomic and laser data plus the two observability conditions: the induced
// pair potential must beat (a) the off-resonant absorption linewidth
// hbar*Gamma*S and (b) the recoil-heating energy hbar*Gamma_heat.
//
// All types are immutable after construction and all functions are pure.
namespace latpair::phys {

struct AtomSpecies {
    std::string name;
    double mass_kg = 0.0;
    double transition_wavelength_m = 0.0;  // lambda_A
    double natural_linewidth = 0.0;        // Gamma, angular (rad/s)
    double dipole_moment_cgs = 0.0;        // esu*cm; derived from Gamma unless overridden

    double transition_omega() const;       // omega_A = 2 pi c / lambda_A, rad/s

    static AtomSpecies make(const std::string& name, double mass_kg,
                            double wavelength_m, double linewidth_rad_s,
                            std::optional<double> dipole_override_cgs = {});
};

struct LaserField {
    double wavelength_m = 0.0;   // sets k = 2 pi / lambda (geometry / retardation)
    double intensity_W_cm2 = 0.0;
    double detuning = 0.0;       // delta = omega - omega_A, angular (rad/s); sets alpha
    Eigen::Vector3d direction{0, 0, 1};
    // only circular polarization is supported

    double wavenumber_cgs() const { return 2.0 * M_PI / (wavelength_m * 1e2); }  // 1/cm

    static LaserField make(double wavelength_m, double intensity_W_cm2,
                           double detuning_rad_s, const Eigen::Vector3d& direction);
};

struct DerivedParams {
    double polarizability_cgs = 0.0;  // alpha, cm^3
    double rabi_frequency = 0.0;      // Omega, rad/s
    double saturation = 0.0;          // S
    double recoil_energy_erg = 0.0;   // E_R of the binding laser photon
    double lamb_dicke = 0.0;          // (k r)^2 at the reference separation
    double heating_energy_erg = 0.0;  // hbar * Gamma_heat
    double absorption_energy_erg = 0.0;  // hbar * Gamma * S
    bool saturation_small = true;     // S << 1 flag (violated => false)
};

struct FeasibilityReport {
    double v_ab_erg = 0.0;            // |V_AB| at the reference separation
    double absorption_energy_erg = 0.0;
    double heating_energy_erg = 0.0;
    double ratio_absorption = 0.0;    // |V| / (hbar Gamma S)
    double ratio_heating = 0.0;       // |V| / (hbar Gamma_heat)
    bool observable = false;
    bool near_zone = true;            // kr < 1; outside, order-of-magnitude only
    double kr = 0.0;
    double f_theta = 0.0;
};

// dipole moment from the spontaneous-emission rate:
// Gamma = 4 d^2 omega_A^3 / (3 hbar c^3)   (Gaussian units)
double dipole_from_linewidth_cgs(double linewidth_rad_s, double omega_A);

// alpha = 2 omega_A d^2 / (hbar (omega_A^2 - omega^2)); positive below
// resonance, negative above. Throws on resonance.
double polarizability(const AtomSpecies& atom, double laser_omega);

// S = 2 Omega^2 / (4 delta^2 + Gamma^2)
double saturation(double rabi, double detuning, double linewidth);

// Omega = d E0 / hbar with E0 = sqrt(8 pi I / c)
double rabi_frequency(const AtomSpecies& atom, double intensity_W_cm2);

// E_R = hbar^2 k^2 / 2m. k in 1/m, mass in kg; returned in joule.
double recoil_energy(double k_per_m, double mass_kg);

DerivedParams derive_params(const AtomSpecies& atom, const LaserField& laser,
                            double reference_separation_m);

// Conditions (a) and (b) at a given separation and interatomic angle.
// threshold: both ratios must exceed it for the "observable" flag (default 10).
FeasibilityReport feasibility_report(const AtomSpecies& atom,
                                     const LaserField& lattice_laser,
                                     const LaserField& binding_laser,
                                     double separation_m, double cos_theta,
                                     double threshold = 10.0);

// --- species registry ---
// built-ins: Li-7 and Cs-133
const std::vector<AtomSpecies>& builtin_species();
AtomSpecies lookup_species(const std::string& name);
// load additional entries from a JSON file: [{name, mass_amu,
// transition_wavelength_nm, linewidth_over_2pi_MHz, dipole_moment_debye?}, ...]
std::vector<AtomSpecies> load_species_file(const std::string& path);

}  // namespace latpair::phys
