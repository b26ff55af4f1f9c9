#include "catwig/decoherence.hpp"

#include <cmath>

#include "catwig/constants.hpp"
#include "catwig/dynamics.hpp"
#include "catwig/params.hpp"

namespace catwig {

void DecoherenceParams::validate() const {
    if (!(q_factor > 0.0)) throw ValidationError("q_factor must be strictly positive");
    if (!(bath_temp_k > 0.0))
        throw ValidationError("bath_temp_k must be strictly positive");
    if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
    if (!(omega_c_rad_s > 0.0))
        throw ValidationError("omega_c_rad_s must be strictly positive");
    if (!(chi > 0.0)) throw ValidationError("chi must be strictly positive");
}

double DecoherenceParams::diffusion(double mass_kg) const {
    return 2.0 * mass_kg * gamma() * constants::k_B * bath_temp_k;
}

std::optional<double> tau_dec(const DecoherenceParams& p) {
    p.validate();
    if (p.kappa == 0.0) return std::nullopt;

    const double tau_q = constants::hbar * p.q_factor /
                         (16.0 * constants::k_B * p.bath_temp_k * p.kappa * p.kappa);

    // Diffusion route hbar^2 / (D (dx)^2); the reference mass cancels exactly
    // between D and x0, any positive value gives the same number.
    const double mass_ref = 1e-12;
    const double x0 = ground_state_size(mass_ref, p.omega_c_rad_s);
    const double dx = std::sqrt(8.0) * p.kappa * x0;
    const double tau_d =
        constants::hbar * constants::hbar / (p.diffusion(mass_ref) * dx * dx);

    if (std::abs(tau_q - tau_d) > 1e-9 * tau_q)
        throw ConvergenceError("decoherence timescale routes disagree beyond 1e-9");
    return p.chi * tau_q;
}

double revival_visibility(double kappa, double n_bar, const DecoherenceParams& p,
                          double t_seconds) {
    if (t_seconds < 0.0) throw ValidationError("time must be non-negative");
    const double v = visibility_thermal(kappa, n_bar, p.omega_c_rad_s * t_seconds);
    const auto tau = tau_dec(p);
    if (!tau) return v; // no superposition, nothing to decohere
    return v * std::exp(-t_seconds / *tau);
}

WignerGrid wigner_damped_cat(const CatState& state, double cross_damping,
                             const GridSpec& spec) {
    if (!(cross_damping >= 0.0 && cross_damping <= 1.0))
        throw ValidationError("cross damping must lie in [0, 1]");

    auto terms = detail::cat_terms(state, cross_damping);
    std::complex<double> trace = 0.0;
    for (const auto& t : terms) trace += t.coeff;
    if (!(trace.real() > 0.0))
        throw ValidationError("damped state has non-positive trace");
    for (auto& t : terms) t.coeff /= trace.real();

    WignerGrid grid;
    grid.spec = spec;
    grid.dx = (spec.x_max - spec.x_min) / spec.nx;
    grid.dp = (spec.p_max - spec.p_min) / spec.np;
    grid.values.assign(static_cast<size_t>(spec.nx) * spec.np, 0.0);
    detail::accumulate_terms(terms, grid);
    if (std::abs(grid.integral() - 1.0) > 1e-3)
        throw ValidationError("grid too small for damped cat state; widen the bounds");
    return grid;
}

WignerGrid wigner_decohered(const CatState& state, const DecoherenceParams& p,
                            double t_seconds, const GridSpec& grid) {
    if (t_seconds < 0.0) throw ValidationError("time must be non-negative");
    const auto tau = tau_dec(p);
    const double damping = tau ? std::exp(-t_seconds / *tau) : 1.0;
    return wigner_damped_cat(state, damping, grid);
}

std::vector<std::string> markov_warnings(const DecoherenceParams& p) {
    std::vector<std::string> out;
    if (p.q_factor < 100.0)
        out.push_back("Q < 100: weak-coupling (Markovian) assumption is questionable");
    if (constants::k_B * p.bath_temp_k < 10.0 * constants::hbar * p.omega_c_rad_s)
        out.push_back(
            "k_B T_b < 10 hbar omega_c: bath is not hot enough for the Markovian "
            "diffusion estimate");
    return out;
}

} // namespace catwig
