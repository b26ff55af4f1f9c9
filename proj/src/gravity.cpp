#include "catwig/gravity.hpp"

#include <cmath>

#include "catwig/constants.hpp"

namespace catwig {

void GravityModel::validate() const {
    if (!(constituent_mass_kg > 0.0))
        throw ValidationError("constituent mass must be strictly positive");
    if (total_mass_kg < constituent_mass_kg)
        throw ValidationError("total mass must be at least the constituent mass");
    if (!(sphere_radius_m > 0.0))
        throw ValidationError("sphere radius must be strictly positive");
}

double delta_E_nuclei(const GravityModel& g) {
    g.validate();
    if (g.separation_m < 2.0 * g.sphere_radius_m)
        throw DomainError(
            "nuclear-sphere self-energy requires separation >= 2a (non-overlapping "
            "spheres)");
    return 2.0 * constants::G * g.total_mass_kg * g.constituent_mass_kg *
           (6.0 / (5.0 * g.sphere_radius_m) - 1.0 / g.separation_m);
}

double delta_E_wavepacket(double total_mass_kg, double constituent_mass_kg,
                          double x0_m, double kappa) {
    if (!(total_mass_kg > 0.0) || !(constituent_mass_kg > 0.0) || !(x0_m > 0.0))
        throw ValidationError("masses and x0 must be strictly positive");
    if (!(kappa > 0.0)) throw ValidationError("kappa must be strictly positive");
    const double bracket = 24.0 / 5.0 - 1.0 / (std::sqrt(2.0) * kappa);
    if (!(bracket > 0.0))
        throw DomainError(
            "separation below the sphere-contact regime of the wavepacket model");
    return constants::G * total_mass_kg * constituent_mass_kg / x0_m * bracket;
}

double collapse_time(double delta_E_joules) {
    if (!(delta_E_joules > 0.0))
        throw DomainError("collapse time requires a positive self-energy");
    return constants::hbar / delta_E_joules;
}

} // namespace catwig
