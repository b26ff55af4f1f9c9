#include "catwig/cooling.hpp"

#include <cmath>

namespace catwig {

void CoolingConfig::validate() const {
    if (alpha < 0.0) throw ValidationError("alpha must be non-negative");
    if (!(gamma_a_rad_s > 0.0))
        throw ValidationError("gamma_a must be strictly positive");
    if (!(gamma_m_rad_s > 0.0))
        throw ValidationError("gamma_m must be strictly positive");
    if (n_bar_thermal < 0.0)
        throw ValidationError("thermal occupation must be non-negative");
    if (!(omega_c_rad_s > 0.0))
        throw ValidationError("omega_c must be strictly positive");
}

SidebandRates cooling_rates(const CoolingConfig& c) {
    c.validate();
    const double omega_drive = c.alpha * c.omega_c_rad_s;
    const double strength = omega_drive * omega_drive * c.gamma_a_rad_s / 4.0;
    const double half_width = c.gamma_a_rad_s / 2.0;
    const double lorentz_minus =
        half_width * half_width +
        (c.detuning_rad_s + c.omega_c_rad_s) * (c.detuning_rad_s + c.omega_c_rad_s);
    const double lorentz_plus =
        half_width * half_width +
        (c.detuning_rad_s - c.omega_c_rad_s) * (c.detuning_rad_s - c.omega_c_rad_s);
    return SidebandRates{strength / lorentz_minus, strength / lorentz_plus};
}

double equilibrium_phonon(const CoolingConfig& c) {
    const SidebandRates r = cooling_rates(c);
    const double net_damping = c.gamma_m_rad_s + r.anti_stokes - r.stokes;
    if (!(net_damping > 0.0))
        throw DomainError("non-positive net damping: anti-damping (unstable) regime");
    return (c.gamma_m_rad_s * c.n_bar_thermal + r.stokes) / net_damping;
}

double sideband_ratio(double n_phonon, const SidebandRates& rates) {
    if (n_phonon < 0.0) throw ValidationError("phonon number must be non-negative");
    return n_phonon * rates.anti_stokes / ((n_phonon + 1.0) * rates.stokes);
}

double low_field_ratio(double n_bar_thermal, const SidebandRates& rates) {
    if (n_bar_thermal < 0.0)
        throw ValidationError("thermal occupation must be non-negative");
    return n_bar_thermal / (n_bar_thermal + 1.0) * rates.anti_stokes / rates.stokes;
}

double phonon_from_ratio(double ratio, const SidebandRates& rates) {
    if (ratio < 0.0) throw ValidationError("ratio must be non-negative");
    const double q = ratio * rates.stokes / rates.anti_stokes; // n/(n+1)
    if (q >= 1.0)
        throw DomainError("ratio exceeds the asymptotic limit A-/A+; no finite phonon "
                          "number reproduces it");
    return q / (1.0 - q);
}

} // namespace catwig
