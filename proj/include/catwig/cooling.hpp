// cooling.hpp — passive sideband cooling: Lorentzian sideband rates,
// equilibrium phonon number versus pump power, and anti-Stokes/Stokes
// thermometry.
//
// Weak-coupling rate-equation model with the overall rate normalization
// pinned to Omega = alpha * omega_c; every exported check is on ratios,
// limits or crossings and is independent of that normalization.

#pragma once

#include "catwig/errors.hpp"

namespace catwig {

struct CoolingConfig {
    double alpha = 0.0;       // dimensionless pump amplitude sqrt(2 n_a) kappa
    double detuning_rad_s = 0.0; // Delta, default -omega_c set by callers
    double gamma_a_rad_s = 0.0;  // cavity power decay
    double gamma_m_rad_s = 0.0;  // mechanical damping
    double n_bar_thermal = 0.0;  // bath occupation
    double omega_c_rad_s = 0.0;

    void validate() const;
};

struct SidebandRates {
    double anti_stokes = 0.0; // A-, cooling
    double stokes = 0.0;      // A+, heating
};

// A-/+ = Omega^2 (gamma_a/4) / ((gamma_a/2)^2 + (Delta +- omega_c)^2).
SidebandRates cooling_rates(const CoolingConfig& c);

// Equilibrium phonon number (gamma_m n_th + A+)/(gamma_m + A- - A+).
// Throws DomainError when the net damping is non-positive (anti-damping).
double equilibrium_phonon(const CoolingConfig& c);

// Anti-Stokes/Stokes ratio R = n A- / ((n+1) A+).
double sideband_ratio(double n_phonon, const SidebandRates& rates);

// Low-power limit R0 = (n_th/(n_th+1)) (A-/A+).
double low_field_ratio(double n_bar_thermal, const SidebandRates& rates);

// Inverts R(n) = r for the phonon number (R is strictly monotone in n).
double phonon_from_ratio(double ratio, const SidebandRates& rates);

} // namespace catwig
