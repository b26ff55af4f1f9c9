// montecarlo.hpp — stochastic emulator of the photon-counting experiment:
// ring-down-weighted photon exit times, two-port click statistics and
// visibility estimation.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "catwig/decoherence.hpp"

namespace catwig {

enum class Port : int { plus = +1, minus = -1 };

struct ClickRecord {
    double exit_phase = 0.0; // omega_c * t at photon exit [rad]
    Port port = Port::plus;
    std::uint64_t seed = 0;
    double theta = 0.0; // projection phase of this trial
};

struct VisibilityEstimate {
    double v = 0.0;
    double std_err = 0.0;
    std::size_t count = 0;
};

enum class VisibilityModel { pure, thermal, decohered };

struct RunConfig {
    double kappa = 0.0;
    double n_bar = 0.0; // used by thermal and decohered models
    std::optional<DecoherenceParams> decoherence; // required for decohered
    double omega_c_rad_s = 1.0; // converts exit phase to seconds (decohered)
    double finesse = 0.0;
    double round_trips = 0.0;
    int theta_steps = 16; // deterministic uniform theta sweep
    VisibilityModel model = VisibilityModel::pure;

    void validate() const;
};

// Counter-based deterministic generator (SplitMix64 finalizer over
// (seed, counter, stream)); no global state, identical output for identical
// seeds regardless of threading.
struct CounterRng {
    std::uint64_t seed = 0;
    // Uniform double in [0, 1).
    double uniform(std::uint64_t counter, std::uint64_t stream) const;
};

// Two-port click probabilities (1 +- v cos(fringe_phase))/2.
// Throws ValidationError for v outside [0, 1].
std::pair<double, double> click_probabilities(double v, double fringe_phase);

// Ring-down photon survival exp(-(N/F) omega_c t); equals e^{-2 pi} after one
// mechanical period when F = N.
double photon_survival(double finesse, double round_trips, double phase);

// Visibility of the configured model at a given exit phase.
double model_visibility(const RunConfig& cfg, double phase);

// Dynamic fringe phase kappa^2 (phase - sin phase) for a beta = 0 run.
double fringe_dynamic_phase(double kappa, double phase);

// Emulates n_photons independent trials. Exit phases follow the exponential
// ring-down distribution with rate (N/F) per radian; photons that have not
// exited within two mechanical periods are recorded as lost. Output order is
// photon-index order and byte-identical across thread counts for a fixed seed.
std::vector<ClickRecord> simulate_run(std::uint64_t seed, std::size_t n_photons,
                                      const RunConfig& cfg, int n_threads = 1);

// Least-squares fit of the port asymmetry against (cos theta, sin theta) over
// the records whose exit phase falls in [center - width/2, center + width/2].
// Throws ValidationError on fewer than 100 records or degenerate theta
// coverage.
VisibilityEstimate estimate_visibility(std::span<const ClickRecord> records,
                                       double bin_center, double bin_width);

// Fixed-format CSV emission used by the CLI and the byte-stability checks.
std::string records_to_csv(std::span<const ClickRecord> records);

} // namespace catwig
