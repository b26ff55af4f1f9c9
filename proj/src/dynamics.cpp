#include "catwig/dynamics.hpp"

#include <cmath>

#include "catwig/constants.hpp"

namespace catwig {

namespace {

// 1 - cos(t) evaluated as 2 sin^2(t/2); avoids cancellation near revival.
double one_minus_cos(double t) {
    const double s = std::sin(0.5 * t);
    return 2.0 * s * s;
}

} // namespace

EvolvedAmplitudes evolve_amplitudes(double kappa, std::complex<double> beta,
                                    double phase) {
    if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
    const std::complex<double> rot = std::exp(std::complex<double>(0.0, -phase));
    EvolvedAmplitudes ev;
    ev.phi0 = beta * rot;
    ev.phi1 = kappa * (1.0 - rot) + beta * rot;
    ev.kerr_phase = kappa * kappa * (phase - std::sin(phase));
    ev.cross_phase = -std::imag(ev.phi0 * std::conj(ev.phi1));
    return ev;
}

double visibility_pure(double kappa, double phase) {
    if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
    return std::exp(-kappa * kappa * one_minus_cos(phase));
}

double visibility_thermal(double kappa, double n_bar, double phase) {
    if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
    if (n_bar < 0.0) throw ValidationError("n_bar must be non-negative");
    return std::exp(-kappa * kappa * (2.0 * n_bar + 1.0) * one_minus_cos(phase));
}

double visibility_classical(const PhysicalParams& params, double temp_k, double phase) {
    if (!(temp_k >= 0.0)) throw ValidationError("temperature must be non-negative");
    if (temp_k == 0.0) return 1.0;
    const double n = params.effective_round_trips();
    const double scale = 2.0 * n / params.lambda_m;
    const double exponent = constants::k_B * temp_k /
                            (params.mass_kg * params.omega_c_rad_s * params.omega_c_rad_s) *
                            scale * scale * one_minus_cos(phase);
    return std::exp(-exponent);
}

double entropy_from_visibility(double v) {
    if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError("visibility must lie in [0, 1]");
    if (v == 0.0) return 1.0;
    if (v == 1.0) return 0.0;
    return 1.0 + 0.5 * v * std::log2((1.0 - v) / (1.0 + v)) -
           0.5 * std::log2(1.0 - v * v);
}

double state_separation(double kappa, double x0_m, double phase) {
    if (!(kappa > 0.0) || !(x0_m > 0.0))
        throw ValidationError("kappa and x0 must be strictly positive");
    return std::sqrt(2.0) * x0_m * kappa * one_minus_cos(phase);
}

} // namespace catwig
