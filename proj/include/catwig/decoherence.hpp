// decoherence.hpp — environmentally induced decoherence: timescale, visibility
// damping envelope and decohered Wigner functions.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catwig/wigner.hpp"

namespace catwig {

struct DecoherenceParams {
    double q_factor = 0.0;    // mechanical Q
    double bath_temp_k = 0.0; // T_b
    double kappa = 0.0;
    double omega_c_rad_s = 0.0;
    double chi = 1.0; // correction factor; 8/3 selects the exact-solution scaling

    double gamma() const { return omega_c_rad_s / q_factor; } // damping rate [1/s]
    // Diffusion coefficient 2 m gamma k_B T_b for a given mass.
    double diffusion(double mass_kg) const;

    void validate() const;
};

// Superposition lifetime chi * hbar Q / (16 k_B T_b kappa^2). Both the
// diffusion form hbar^2/(D (dx)^2) and the Q form are evaluated and asserted
// equal to relative 1e-9. kappa = 0 carries no superposition: the result is
// empty rather than a number.
std::optional<double> tau_dec(const DecoherenceParams& p);

// Damped revival: visibility_thermal(kappa, n_bar, omega_c t) * exp(-t/tau).
double revival_visibility(double kappa, double n_bar, const DecoherenceParams& p,
                          double t_seconds);

// Closed-form cat Wigner with the interference cross-term scaled by
// exp(-t/tau_dec); the two Gaussian lobes are untouched and the state is
// renormalized. Time is in seconds.
WignerGrid wigner_decohered(const CatState& state, const DecoherenceParams& p,
                            double t_seconds, const GridSpec& grid);

// Same, driven directly by a damping factor in [0, 1] (dimensionless mode).
WignerGrid wigner_damped_cat(const CatState& state, double cross_damping,
                             const GridSpec& grid);

// Markovian-validity warnings (Q < 100 or k_B T_b < 10 hbar omega_c); never
// errors, the envelope is still evaluated.
std::vector<std::string> markov_warnings(const DecoherenceParams& p);

} // namespace catwig
