// dynamics.hpp — closed-form entangled photon + cantilever evolution and
// interference visibility (pure, thermal, classical) plus the
// entropy-visibility map.
//
// Phase input is the dimensionless omega_c * t throughout. The global optical
// phase exp(-i omega_a t) is unobservable in any visibility and is dropped
// everywhere in this module.

#pragma once

#include <complex>

#include "catwig/params.hpp"

namespace catwig {

// Coherent amplitudes of the two entangled branches after evolution from an
// initial cantilever coherent state beta.
struct EvolvedAmplitudes {
    std::complex<double> phi0; // branch without photon: beta e^{-i wt}
    std::complex<double> phi1; // branch with photon: kappa(1 - e^{-i wt}) + beta e^{-i wt}
    double kerr_phase = 0.0;   // kappa^2 (wt - sin wt)
    double cross_phase = 0.0;  // -Im[phi0 * conj(phi1)]
};

EvolvedAmplitudes evolve_amplitudes(double kappa, std::complex<double> beta,
                                    double phase);

// Fringe contrast for a cantilever starting in a pure coherent state:
// exp(-kappa^2 (1 - cos wt)).
double visibility_pure(double kappa, double phase);

// Thermal initial state with mean occupation n_bar:
// exp(-kappa^2 (2 n_bar + 1)(1 - cos wt)).
double visibility_thermal(double kappa, double n_bar, double phase);

// Classical high-temperature prediction:
// exp(-(k_B T/(m omega_c^2)) (2N/lambda)^2 (1 - cos wt)).
double visibility_classical(const PhysicalParams& params, double temp_k, double phase);

// Von Neumann entropy of the photon (bits) as a function of visibility,
// S = 1 + (v/2) log2((1-v)/(1+v)) - (1/2) log2(1-v^2), with continuous
// endpoint limits S(1)=0, S(0)=1. Throws ValidationError outside [0,1].
double entropy_from_visibility(double v);

// Position-space separation of the two branch states in meters;
// sqrt(2) x0 kappa (1 - cos wt), which equals sqrt(8) kappa x0 at wt = pi.
double state_separation(double kappa, double x0_m, double phase);

} // namespace catwig
