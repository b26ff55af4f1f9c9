// params.hpp — physical device inputs and derived scalar quantities.

#pragma once

#include <optional>
#include <string>

#include "catwig/errors.hpp"

namespace catwig {

// Raw device/experiment inputs, all SI. At least one of cavity_length_m and
// round_trips must be present; if both are, they must be mutually consistent
// (N = pi c / (L omega_c) to relative 1e-6).
struct PhysicalParams {
    double mass_kg = 0.0;        // cantilever mass m
    double omega_c_rad_s = 0.0;  // mechanical angular frequency
    double lambda_m = 0.0;       // optical wavelength
    std::optional<double> cavity_length_m; // L
    std::optional<double> round_trips;     // N, cavity round trips per period
    double finesse = 0.0;        // F
    double q_factor = 0.0;       // mechanical Q
    double bath_temp_k = 0.0;    // T_b
    double mode_temp_k = 0.0;    // T (fundamental mode)

    // Throws ValidationError on any violated invariant.
    void validate() const;

    double omega_a() const; // optical angular frequency 2*pi*c/lambda

    // Effective round-trip count: round_trips if given, else pi*c/(L*omega_c).
    double effective_round_trips() const;
};

struct DerivedQuantities {
    double x0_m = 0.0;             // ground-state wavepacket size sqrt(hbar/(m omega_c))
    double kappa = 0.0;            // dimensionless optomechanical coupling
    double t_eid_k = 0.0;          // hbar*omega_c*Q/k_B
    double n_bar = 0.0;            // mean phonon number at mode_temp_k
    double finesse_required = 0.0; // lambda/(2*x0)
};

// Ground-state wavepacket size sqrt(hbar/(m*omega_c)).
double ground_state_size(double mass_kg, double omega_c);

// Coupling constant from cavity geometry: (omega_a/(L omega_c)) sqrt(hbar/(2 m omega_c)).
double kappa_from_cavity(double omega_a, double cavity_length_m, double mass_kg,
                         double omega_c);

// Coupling constant from round trips: sqrt(2) N x0 / lambda.
double kappa_from_round_trips(double round_trips, double x0_m, double lambda_m);

// Bose occupation 1/(exp(hbar omega_c / k_B T) - 1); returns 0 at T = 0.
// Throws ValidationError for T < 0 or omega_c <= 0.
double mean_phonon(double temp_k, double omega_c);

// Characteristic environmentally-induced-decoherence temperature hbar*omega_c*Q/k_B.
double t_eid(double omega_c, double q_factor);

// All derived scalars for a validated parameter set. When both L and N are
// supplied the two kappa routes are asserted equal to relative 1e-9.
DerivedQuantities derive_quantities(const PhysicalParams& params);

// Configuration ingestion. Field names are fixed: mass_kg, omega_c_rad_s,
// lambda_m, cavity_length_m, round_trips, finesse, q_factor, bath_temp_k,
// mode_temp_k. Unknown fields are rejected.
PhysicalParams params_from_json_text(const std::string& text);
PhysicalParams params_from_json_file(const std::string& path);
std::string params_to_json_text(const PhysicalParams& params);

} // namespace catwig
