#include "catwig/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <thread>

#include "catwig/constants.hpp"
#include "catwig/dynamics.hpp"

namespace catwig {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double kLossCutoffPhase = 4.0 * constants::pi; // two mechanical periods

} // namespace

void RunConfig::validate() const {
    if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
    if (n_bar < 0.0) throw ValidationError("n_bar must be non-negative");
    if (!(finesse > 0.0) || !(round_trips > 0.0))
        throw ValidationError("finesse and round_trips must be strictly positive");
    if (theta_steps < 1) throw ValidationError("theta_steps must be at least 1");
    if (!(omega_c_rad_s > 0.0))
        throw ValidationError("omega_c must be strictly positive");
    if (model == VisibilityModel::decohered) {
        if (!decoherence)
            throw ValidationError("decohered model requires decoherence parameters");
        decoherence->validate();
    }
}

double CounterRng::uniform(std::uint64_t counter, std::uint64_t stream) const {
    const std::uint64_t bits = mix64(mix64(seed ^ mix64(counter)) ^ stream);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::pair<double, double> click_probabilities(double v, double fringe_phase) {
    if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError("visibility must lie in [0, 1]");
    const double p_plus = 0.5 * (1.0 + v * std::cos(fringe_phase));
    return {p_plus, 1.0 - p_plus};
}

double photon_survival(double finesse, double round_trips, double phase) {
    if (!(finesse > 0.0) || !(round_trips > 0.0))
        throw ValidationError("finesse and round_trips must be strictly positive");
    return std::exp(-(round_trips / finesse) * phase);
}

double fringe_dynamic_phase(double kappa, double phase) {
    return kappa * kappa * (phase - std::sin(phase));
}

double model_visibility(const RunConfig& cfg, double phase) {
    switch (cfg.model) {
        case VisibilityModel::pure:
            return visibility_pure(cfg.kappa, phase);
        case VisibilityModel::thermal:
            return visibility_thermal(cfg.kappa, cfg.n_bar, phase);
        case VisibilityModel::decohered:
            return revival_visibility(cfg.kappa, cfg.n_bar, *cfg.decoherence,
                                      phase / cfg.omega_c_rad_s);
    }
    throw ValidationError("unknown visibility model");
}

std::vector<ClickRecord> simulate_run(std::uint64_t seed, std::size_t n_photons,
                                      const RunConfig& cfg, int n_threads) {
    if (n_photons < 1) throw ValidationError("photon count must be at least 1");
    if (n_threads < 1) throw ValidationError("thread count must be at least 1");
    cfg.validate();

    const CounterRng rng{seed};
    const double rate = cfg.round_trips / cfg.finesse; // exits per radian

    // Slot per photon; lost photons keep a NaN marker and are compacted away
    // afterwards, so the merged order is (seed, index) regardless of threads.
    std::vector<ClickRecord> slots(n_photons);
    std::vector<char> kept(n_photons, 0);

    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const double u_exit = rng.uniform(k, 0);
            const double phase = -std::log1p(-u_exit) / rate;
            if (phase > kLossCutoffPhase) continue; // photon lost
            const double theta =
                2.0 * constants::pi * static_cast<double>(k % cfg.theta_steps) /
                cfg.theta_steps;
            const double v = model_visibility(cfg, phase);
            const double fringe = theta + fringe_dynamic_phase(cfg.kappa, phase);
            const auto [p_plus, p_minus] = click_probabilities(v, fringe);
            (void)p_minus;
            const double u_port = rng.uniform(k, 1);
            slots[k] = ClickRecord{phase, u_port < p_plus ? Port::plus : Port::minus,
                                   seed, theta};
            kept[k] = 1;
        }
    };

    if (n_threads == 1 || n_photons < 1024) {
        worker(0, n_photons);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n_photons + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const std::size_t lo = static_cast<std::size_t>(t) * chunk;
            const std::size_t hi = std::min(n_photons, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<ClickRecord> records;
    records.reserve(n_photons);
    for (std::size_t k = 0; k < n_photons; ++k)
        if (kept[k]) records.push_back(slots[k]);
    return records;
}

VisibilityEstimate estimate_visibility(std::span<const ClickRecord> records,
                                       double bin_center, double bin_width) {
    if (!(bin_width > 0.0)) throw ValidationError("bin width must be positive");

    // Normal equations for s = A cos(theta) + B sin(theta).
    double scc = 0.0, scs = 0.0, sss = 0.0, sc = 0.0, ss = 0.0, s2 = 0.0;
    std::size_t n = 0;
    double theta_min = 0.0, theta_max = 0.0;
    for (const ClickRecord& r : records) {
        if (std::abs(r.exit_phase - bin_center) > 0.5 * bin_width) continue;
        const double c = std::cos(r.theta);
        const double s = std::sin(r.theta);
        const double y = static_cast<double>(static_cast<int>(r.port));
        if (n == 0) theta_min = theta_max = r.theta;
        theta_min = std::min(theta_min, r.theta);
        theta_max = std::max(theta_max, r.theta);
        scc += c * c;
        scs += c * s;
        sss += s * s;
        sc += c * y;
        ss += s * y;
        s2 += y * y;
        ++n;
    }
    if (n < 100)
        throw ValidationError("fewer than 100 records in the requested time bin");

    const double det = scc * sss - scs * scs;
    if (!(det > 1e-9 * (scc + sss) * (scc + sss)) || theta_max - theta_min < 1.0)
        throw ValidationError("degenerate theta coverage in the requested time bin");

    const double a = (sss * sc - scs * ss) / det;
    const double b = (scc * ss - scs * sc) / det;
    const double amp = std::hypot(a, b);

    // Residual variance and propagated amplitude error.
    const double rss = s2 - a * sc - b * ss;
    const double sigma2 = std::max(rss, 0.0) / static_cast<double>(n - 2);
    const double cov_aa = sigma2 * sss / det;
    const double cov_bb = sigma2 * scc / det;
    const double cov_ab = -sigma2 * scs / det;
    double var_amp;
    if (amp > 1e-12) {
        const double ga = a / amp, gb = b / amp;
        var_amp = ga * ga * cov_aa + 2.0 * ga * gb * cov_ab + gb * gb * cov_bb;
    } else {
        var_amp = std::max(cov_aa, cov_bb);
    }

    VisibilityEstimate est;
    est.v = std::clamp(amp, 0.0, 1.0);
    est.std_err = std::sqrt(std::max(var_amp, 0.0));
    est.count = n;
    return est;
}

std::string records_to_csv(std::span<const ClickRecord> records) {
    std::string out = "exit_phase,port,seed,theta\n";
    char line[128];
    for (const ClickRecord& r : records) {
        std::snprintf(line, sizeof line, "%.17g,%d,%llu,%.17g\n", r.exit_phase,
                      static_cast<int>(r.port),
                      static_cast<unsigned long long>(r.seed), r.theta);
        out += line;
    }
    return out;
}

} // namespace catwig
