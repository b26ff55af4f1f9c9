// gravity.hpp — Penrose-Diosi gravitational self-energy and collapse
// timescale for the two uniform-sphere mass-distribution models.

#pragma once

#include "catwig/errors.hpp"

namespace catwig {

// Default constituent mass: silicon nuclear mass [kg].
inline constexpr double silicon_nuclear_mass_kg = 4.7e-26;

enum class MassModel { nuclear_sphere, wavepacket };

struct GravityModel {
    double total_mass_kg = 0.0;       // m
    double constituent_mass_kg = 0.0; // m1
    double sphere_radius_m = 0.0;     // a
    double separation_m = 0.0;        // superposition separation (nuclear-sphere)
    MassModel model = MassModel::nuclear_sphere;

    void validate() const;
};

// Self-energy of superposed nuclear spheres: 2 G m m1 (6/(5a) - 1/dx),
// valid for dx >= 2a; throws DomainError outside that regime.
double delta_E_nuclei(const GravityModel& g);

// Wavepacket-sized spheres (a = x0/2, dx = sqrt(8) kappa x0):
// (G m m1 / x0)(24/5 - 1/(sqrt(2) kappa)). Throws DomainError when the
// bracket is non-positive (separation below sphere contact).
double delta_E_wavepacket(double total_mass_kg, double constituent_mass_kg,
                          double x0_m, double kappa);

// tau_G = hbar / delta_E; throws DomainError for delta_E <= 0.
double collapse_time(double delta_E_joules);

} // namespace catwig
