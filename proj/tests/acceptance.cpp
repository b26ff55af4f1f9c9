// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Pinned numbers come from independent high-resolution oracles run
// before this suite was written; see the test comments next to each pin.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "catwig/constants.hpp"
#include "catwig/cooling.hpp"
#include "catwig/decoherence.hpp"
#include "catwig/dynamics.hpp"
#include "catwig/gravity.hpp"
#include "catwig/montecarlo.hpp"
#include "catwig/params.hpp"
#include "catwig/wigner.hpp"

using namespace catwig;

namespace {

const double pi = constants::pi;
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

int failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d (%s): %s%s%s\n", index, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// --- 1. visibility revival -------------------------------------------------
void criterion_revival() {
    bool ok = true;
    for (double kappa : {inv_sqrt2, 1.0, 2.0}) {
        ok = ok && std::abs(visibility_pure(kappa, 2.0 * pi) - 1.0) < 1e-12;
        ok = ok && std::abs(visibility_pure(kappa, pi) -
                            std::exp(-2.0 * kappa * kappa)) < 1e-12;
    }
    report(1, "visibility revival", ok);
}

// --- 2. entropy map ----------------------------------------------------------
void criterion_entropy() {
    bool ok = entropy_from_visibility(1.0) == 0.0;
    ok = ok && std::abs(entropy_from_visibility(1e-8) - 1.0) < 1e-12;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(1e-9, 1.0 - 1e-9);
    for (int i = 0; i < 1000 && ok; ++i) {
        const double v = u(rng);
        const double q = 0.5 * (1.0 + v);
        const double h2 = -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
        ok = std::abs(entropy_from_visibility(v) - h2) < 1e-12;
    }
    report(2, "entropy map", ok);
}

// --- 3. thermal narrowing ----------------------------------------------------
double revival_half_width(double n_bar) {
    // phase offset from the revival where the thermal visibility crosses 1/2
    double lo = 0.0, hi = 1.0;
    const double kappa = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double v = visibility_thermal(kappa, n_bar, 2.0 * pi - mid);
        (v > 0.5 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void criterion_narrowing() {
    const double ratio = revival_half_width(1000.0) / revival_half_width(10.0);
    const double expected = std::sqrt(21.0 / 2001.0);
    const bool ok = std::abs(ratio / expected - 1.0) < 0.02;
    report(3, "thermal narrowing", ok,
           "width ratio " + std::to_string(ratio));
}

// --- 4. classical limit ------------------------------------------------------
void criterion_classical() {
    // parameters engineered for kappa = 0.5 so both expressions stay
    // representable at the half period
    PhysicalParams p;
    p.mass_kg = 1e-12;
    p.omega_c_rad_s = 2.0 * pi * 500.0;
    p.lambda_m = 600e-9;
    p.finesse = 1e6;
    p.q_factor = 1e7;
    p.bath_temp_k = 1e-3;
    p.mode_temp_k = 1e-3;
    const double x0 = ground_state_size(p.mass_kg, p.omega_c_rad_s);
    p.round_trips = 0.5 * p.lambda_m / (std::sqrt(2.0) * x0);

    const double kappa = derive_quantities(p).kappa;
    bool ok = std::abs(kappa - 0.5) < 1e-12;
    // phase chosen so the suppression exponent stays O(1) even at n_bar=1000;
    // at the half period both visibilities underflow and the ratio is useless
    const double phase = 0.1;
    for (double n_bar : {100.0, 300.0, 1000.0}) {
        const double temp = constants::hbar * p.omega_c_rad_s /
                            (constants::k_B * std::log1p(1.0 / n_bar));
        const double vt = visibility_thermal(kappa, n_bar, phase);
        const double vc = visibility_classical(p, temp, phase);
        ok = ok && vt < 0.99 && std::abs(vc / vt - 1.0) < 0.01;
    }
    report(4, "classical limit", ok);
}

// --- 5. Wigner oracle equivalence ---------------------------------------------
void criterion_oracle() {
    bool ok = true;
    double worst = 0.0;
    for (double kappa : {inv_sqrt2, 2.0}) {
        auto proj = project_photon(evolve_amplitudes(kappa, 0.0, pi), 0.0);
        GridSpec spec = default_grid(std::abs(proj.state.alpha1), 256);
        auto closed = wigner_cat(proj.state, spec);
        auto numeric = wigner_numeric(cat_wavefunction(proj.state), spec, 2048);
        double max_diff = 0.0;
        for (size_t i = 0; i < closed.values.size(); ++i)
            max_diff =
                std::max(max_diff, std::abs(closed.values[i] - numeric.values[i]));
        worst = std::max(worst, max_diff);
        ok = ok && max_diff < 1e-8;
        ok = ok && std::abs(closed.integral() - 1.0) < 1e-6;
        ok = ok && std::abs(numeric.integral() - 1.0) < 1e-6;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max |dW| = %.3e", worst);
    report(5, "Wigner oracle equivalence", ok, buf);
}

// --- 6. negativity behavior ---------------------------------------------------
void criterion_negativity() {
    CatState coherent;
    coherent.alpha0 = coherent.alpha1 = std::complex<double>(0.9, -0.4);
    coherent.w0 = coherent.w1 = 0.5;
    bool ok = negativity(wigner_cat(coherent, default_grid(1.0, 256))) < 1e-6;

    // monotone washout with temperature at kappa = 1/sqrt(2), half period
    const int orders[] = {16, 24, 24, 32, 64};
    const double n_bars[] = {0.0, 0.5, 1.0, 2.0, 5.0};
    double prev = 1e300, at_5 = 0.0;
    for (int i = 0; i < 5; ++i) {
        const GridSpec spec =
            default_grid(thermal_alpha_max(inv_sqrt2, pi, n_bars[i]), 512);
        const double n =
            negativity(wigner_thermal(inv_sqrt2, pi, 0.0, n_bars[i], spec, orders[i]));
        if (i == 0) ok = ok && n > 0.0;
        ok = ok && n < prev;
        prev = n;
        at_5 = n;
    }
    // pinned by a 2048^2 / order-64 oracle: N(n_bar=5) = 6.814764887119e-3
    ok = ok && std::abs(at_5 - 6.814764887119e-3) < 5e-5;
    char buf[64];
    std::snprintf(buf, sizeof buf, "N(n=5) = %.6e", at_5);
    report(6, "negativity behavior", ok, buf);
}

// --- 7. harmonic rotation invariance -------------------------------------------
void criterion_rotation() {
    auto proj = project_photon(evolve_amplitudes(2.0, 0.0, pi), 0.0);
    const GridSpec spec = default_grid(4.0, 256);
    auto base = wigner_cat(proj.state, spec);
    auto quarter = wigner_cat(rotate_state(proj.state, pi / 2.0), spec);
    const int n = spec.nx;
    double max_diff = 0.0;
    for (int ix = 0; ix < n; ++ix)
        for (int ip = 0; ip < n; ++ip)
            max_diff = std::max(
                max_diff, std::abs(quarter.at(ix, ip) - base.at(n - 1 - ip, ix)));
    char buf[64];
    std::snprintf(buf, sizeof buf, "max pointwise error %.3e", max_diff);
    report(7, "harmonic rotation invariance", max_diff < 1e-6, buf);
}

// --- 8. decoherence identities ---------------------------------------------------
void criterion_decoherence() {
    DecoherenceParams p;
    p.q_factor = 1e7;
    p.bath_temp_k = 1e-3;
    p.kappa = inv_sqrt2;
    p.omega_c_rad_s = 2.0 * pi * 500.0;

    bool ok = true;
    try {
        const double tau = *tau_dec(p); // internally asserts both forms to 1e-9
        const double t_eid_k = t_eid(p.omega_c_rad_s, p.q_factor);
        const double rate =
            16.0 * p.kappa * p.kappa * p.omega_c_rad_s * p.bath_temp_k / t_eid_k;
        ok = ok && close_rel(1.0 / tau, rate, 1e-12);

        auto corrected = p;
        corrected.chi = 8.0 / 3.0;
        ok = ok && close_rel(*tau_dec(corrected), tau * (8.0 / 3.0), 1e-15);
    } catch (const std::exception&) {
        ok = false;
    }
    report(8, "decoherence identities", ok);
}

// --- 9. gravity timescales ---------------------------------------------------
void criterion_gravity() {
    const double x0 = ground_state_size(1e-12, 2.0 * pi * 1000.0);

    GravityModel g;
    g.total_mass_kg = 1e-12;
    g.constituent_mass_kg = silicon_nuclear_mass_kg;
    g.sphere_radius_m = 1e-15;
    g.separation_m = std::sqrt(8.0) * inv_sqrt2 * x0;
    const double tau_n = collapse_time(delta_E_nuclei(g));
    bool ok = tau_n >= 1e-3 && tau_n <= 100e-3;

    const double tau_w = collapse_time(
        delta_E_wavepacket(1e-12, silicon_nuclear_mass_kg, x0, inv_sqrt2));
    ok = ok && tau_w >= 0.1 && tau_w <= 10.0;

    // sphere model with a = x0/2 and dx = sqrt(8) kappa x0 reduces to the
    // wavepacket expression
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> mass(1e-14, 1e-10);
    std::uniform_real_distribution<double> freq(100.0, 1e5);
    std::uniform_real_distribution<double> coupling(0.5, 4.0);
    for (int i = 0; i < 100 && ok; ++i) {
        const double m = mass(rng);
        const double x = ground_state_size(m, freq(rng));
        const double kappa = coupling(rng);
        GravityModel r;
        r.total_mass_kg = m;
        r.constituent_mass_kg = silicon_nuclear_mass_kg;
        r.sphere_radius_m = x / 2.0;
        r.separation_m = std::sqrt(8.0) * kappa * x;
        ok = close_rel(delta_E_nuclei(r),
                       delta_E_wavepacket(m, silicon_nuclear_mass_kg, x, kappa), 1e-12);
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "tau = %.2f ms / %.2f s", tau_n * 1e3, tau_w);
    report(9, "gravity timescales", ok, buf);
}

// --- 10. finesse/coupling gate -------------------------------------------------
void criterion_finesse_gate() {
    PhysicalParams p;
    p.mass_kg = 1e-12;
    p.omega_c_rad_s = 2.0 * pi * 500.0;
    p.lambda_m = 600e-9;
    p.round_trips = 2e6;
    p.finesse = 2e6;
    p.q_factor = 1e7;
    p.bath_temp_k = 1e-3;
    p.mode_temp_k = 1e-3;
    auto d = derive_quantities(p);
    const bool ok = d.kappa >= 0.85 && d.kappa <= 0.88 &&
                    d.finesse_required >= 1.6e6 && d.finesse_required <= 1.7e6;
    char buf[80];
    std::snprintf(buf, sizeof buf, "kappa = %.4f, F_req = %.3e", d.kappa,
                  d.finesse_required);
    report(10, "finesse/coupling gate", ok, buf);
}

// --- 11. cooling thermometry ----------------------------------------------------
void criterion_cooling() {
    CoolingConfig c;
    c.omega_c_rad_s = 1.0;
    c.detuning_rad_s = -1.0;
    c.gamma_a_rad_s = 1.0;
    c.gamma_m_rad_s = 1e-7;
    c.n_bar_thermal = 1e4;
    c.alpha = 0.0;

    bool ok = close_rel(equilibrium_phonon(c), c.n_bar_thermal, 1e-15);

    c.alpha = 0.05;
    auto rates = cooling_rates(c);
    const double asym = rates.anti_stokes / rates.stokes;
    ok = ok && close_rel(sideband_ratio(1.0, rates), asym / 2.0, 1e-15);
    // half the low-field limit in the n_th >> 1 regime
    const double r0 = low_field_ratio(c.n_bar_thermal, rates);
    ok = ok && std::abs(sideband_ratio(1.0, rates) / (r0 / 2.0) - 1.0) < 2e-4;

    for (double n : {0.2, 1.0, 4.0, 1e3}) {
        const double r = sideband_ratio(n, rates);
        ok = ok && std::abs(sideband_ratio(phonon_from_ratio(r, rates), rates) - r) <
                       1e-10;
    }
    report(11, "cooling thermometry", ok);
}

// --- 12. Monte-Carlo consistency -------------------------------------------------
void criterion_montecarlo() {
    RunConfig cfg;
    cfg.kappa = inv_sqrt2;
    cfg.finesse = 2e6;
    cfg.round_trips = 2e6;
    cfg.theta_steps = 16;
    cfg.model = VisibilityModel::pure;

    auto recs1 = simulate_run(12345, 100000, cfg, 1);
    auto recs8 = simulate_run(12345, 100000, cfg, 8);
    bool ok = records_to_csv(recs1) == records_to_csv(recs8);

    auto est = estimate_visibility(recs1, pi, 0.4);
    const double truth = std::exp(-2.0 * cfg.kappa * cfg.kappa);
    ok = ok && std::abs(est.v - truth) < 3.0 * est.std_err;

    std::size_t past_period = 0;
    for (const auto& r : recs1)
        if (r.exit_phase >= 2.0 * pi) ++past_period;
    const double frac = static_cast<double>(past_period) / recs1.size();
    ok = ok && std::abs(frac / std::exp(-2.0 * pi) - 1.0) < 0.05;

    char buf[96];
    std::snprintf(buf, sizeof buf, "v = %.4f +- %.4f (true %.4f), survival %.3e",
                  est.v, est.std_err, truth, frac);
    report(12, "Monte-Carlo consistency", ok, buf);
}

} // namespace

int main() {
    criterion_revival();
    criterion_entropy();
    criterion_narrowing();
    criterion_classical();
    criterion_oracle();
    criterion_negativity();
    criterion_rotation();
    criterion_decoherence();
    criterion_gravity();
    criterion_finesse_gate();
    criterion_cooling();
    criterion_montecarlo();

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
