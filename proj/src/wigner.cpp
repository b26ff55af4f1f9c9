#include "catwig/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "catwig/constants.hpp"

namespace catwig {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

// Runs fn(row_begin, row_end) over contiguous row blocks. Each row is written
// independently, so results are bit-stable across thread counts.
void parallel_rows(int n_rows, const std::function<void(int, int)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    int n_threads = std::max(1u, std::min(hw, 16u));
    if (n_rows < 4 * n_threads) n_threads = 1;
    if (n_threads == 1) {
        fn(0, n_rows);
        return;
    }
    std::vector<std::thread> pool;
    const int chunk = (n_rows + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(n_rows, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

void validate_grid_spec(const GridSpec& g) {
    if (g.nx < 2 || g.np < 2 || !(g.x_max > g.x_min) || !(g.p_max > g.p_min))
        throw ValidationError("invalid grid spec");
}

WignerGrid make_grid(const GridSpec& spec) {
    validate_grid_spec(spec);
    WignerGrid grid;
    grid.spec = spec;
    grid.dx = (spec.x_max - spec.x_min) / spec.nx;
    grid.dp = (spec.p_max - spec.p_min) / spec.np;
    grid.values.assign(static_cast<size_t>(spec.nx) * spec.np, 0.0);
    return grid;
}

} // namespace

double WignerGrid::integral() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum * dx * dp;
}

GridSpec default_grid(double alpha_max, int n) {
    const double bound = std::sqrt(2.0) * std::abs(alpha_max) + 6.0;
    return GridSpec{-bound, bound, -bound, bound, n, n};
}

double thermal_alpha_max(double kappa, double phase, double n_bar) {
    const EvolvedAmplitudes ev = evolve_amplitudes(kappa, 0.0, phase);
    const double swing = std::max(std::abs(ev.phi0), std::abs(ev.phi1));
    // e^{-|beta|^2 / n_bar} < 1e-12 beyond |beta| = 5.3 sqrt(n_bar).
    return swing + 5.3 * std::sqrt(std::max(n_bar, 0.0));
}

namespace detail {

std::complex<double> coherent_overlap(std::complex<double> bra,
                                      std::complex<double> ket) {
    return std::exp(-0.5 * std::norm(bra) - 0.5 * std::norm(ket) +
                    std::conj(bra) * ket);
}

std::vector<CrossTerm> cat_terms(const CatState& state, double cross_scale,
                                 std::complex<double> weight_scale) {
    const std::complex<double> c0 = weight_scale * state.w0;
    const std::complex<double> c1 = weight_scale * state.w1;
    const std::complex<double> a0 = state.alpha0;
    const std::complex<double> a1 = state.alpha1;
    std::vector<CrossTerm> terms;
    terms.reserve(4);
    terms.push_back({c0 * std::conj(c0), a0, a0});
    terms.push_back({c1 * std::conj(c1), a1, a1});
    // |a0><a1| and its conjugate; the interference part, scaled by
    // cross_scale when decoherence damps it.
    terms.push_back({cross_scale * c0 * std::conj(c1) * coherent_overlap(a1, a0), a0, a1});
    terms.push_back({cross_scale * c1 * std::conj(c0) * coherent_overlap(a0, a1), a1, a0});
    return terms;
}

void accumulate_terms(const std::vector<CrossTerm>& terms, WignerGrid& out) {
    const int nx = out.spec.nx;
    const int np = out.spec.np;
    const double sqrt2 = std::sqrt(2.0);

    // The kernel exp(-2(z - a)(conj(z) - conj(b))) with z = (x + ip)/sqrt(2)
    // separates exactly into exp(-(x - A/2)^2) exp(-(p - iD/2)^2) with
    // A = sqrt(2)(a + conj(b)) and D = sqrt(2)(conj(b) - a); the completion
    // constants cancel. The per-axis factors are tabulated once per term, so
    // the grid loop is a single complex multiply-add per (term, cell).
    struct Factored {
        std::complex<double> coeff;
        std::complex<double> x_shift; // A/2
        std::complex<double> p_shift; // iD/2
    };
    std::vector<Factored> active;
    active.reserve(terms.size());
    for (const auto& t : terms) {
        const std::complex<double> a = t.left;
        const std::complex<double> b = std::conj(t.right);
        // Peak magnitude over phase space is |coeff| e^{|a - right|^2 / 2};
        // terms below threshold cannot move any cell at double precision.
        const double sep2 = std::norm(t.left - t.right);
        if (std::abs(t.coeff) * std::exp(0.5 * sep2) < 1e-16) continue;
        Factored f;
        f.coeff = t.coeff / constants::pi;
        f.x_shift = 0.5 * sqrt2 * (a + b);
        f.p_shift = std::complex<double>(0.0, 1.0) * (0.5 * sqrt2 * (b - a));
        active.push_back(f);
    }

    std::vector<double> row_imag(nx, 0.0);
    constexpr size_t kChunk = 256;
    std::vector<std::complex<double>> ex(kChunk * nx), ep(kChunk * np);

    for (size_t base = 0; base < active.size(); base += kChunk) {
        const size_t count = std::min(kChunk, active.size() - base);
        parallel_rows(static_cast<int>(count), [&](int lo, int hi) {
            for (int t = lo; t < hi; ++t) {
                const Factored& f = active[base + t];
                for (int ix = 0; ix < nx; ++ix) {
                    const std::complex<double> d = out.x_at(ix) - f.x_shift;
                    ex[static_cast<size_t>(t) * nx + ix] = std::exp(-d * d);
                }
                for (int ip = 0; ip < np; ++ip) {
                    const std::complex<double> d = out.p_at(ip) - f.p_shift;
                    ep[static_cast<size_t>(t) * np + ip] =
                        f.coeff * std::exp(-d * d);
                }
            }
        });
        parallel_rows(nx, [&](int lo, int hi) {
            for (int ix = lo; ix < hi; ++ix) {
                double imag_max = row_imag[ix];
                for (int ip = 0; ip < np; ++ip) {
                    std::complex<double> sum = 0.0;
                    for (size_t t = 0; t < count; ++t)
                        sum += ex[t * nx + ix] * ep[t * np + ip];
                    out.at(ix, ip) += sum.real();
                    imag_max = std::max(imag_max, std::abs(sum.imag()));
                }
                row_imag[ix] = imag_max;
            }
        });
    }
    for (double r : row_imag) out.max_imag_residue = std::max(out.max_imag_residue, r);
}

} // namespace detail

Projection project_photon(const EvolvedAmplitudes& ev, double theta) {
    // theta is wrapped to its period before use so full-period shifts of the
    // projection phase give identical states.
    const double theta_wrapped = std::remainder(theta, 2.0 * constants::pi);
    const double phi = ev.kerr_phase + ev.cross_phase + theta_wrapped;
    const std::complex<double> overlap = detail::coherent_overlap(ev.phi0, ev.phi1);
    const std::complex<double> phase_factor = std::exp(
        std::complex<double>(0.0, std::remainder(phi, 2.0 * constants::pi)));
    const double p_proj = 0.5 * (1.0 + (phase_factor * overlap).real());
    if (p_proj < 1e-12)
        throw DomainError("projection post-selects a near-null state (p < 1e-12)");

    Projection out;
    out.success_probability = p_proj;
    out.state.alpha0 = ev.phi0;
    out.state.alpha1 = ev.phi1;
    out.state.phase = phi;
    out.state.w0 = 0.5 / std::sqrt(p_proj);
    out.state.w1 = out.state.w0 * phase_factor;
    return out;
}

WignerGrid wigner_cat(const CatState& state, const GridSpec& spec) {
    WignerGrid grid = make_grid(spec);
    detail::accumulate_terms(detail::cat_terms(state), grid);

    const double total = grid.integral();
    if (std::abs(total - 1.0) > 1e-3) {
        const double amax = std::max(std::abs(state.alpha0), std::abs(state.alpha1));
        const double bound = std::sqrt(2.0) * amax + 6.0;
        std::ostringstream msg;
        msg << "grid too small: normalization is " << total
            << "; suggested symmetric bounds +-" << bound;
        throw ValidationError(msg.str());
    }
    return grid;
}

WignerGrid wigner_numeric(const std::function<std::complex<double>(double)>& psi,
                          const GridSpec& spec, int y_samples) {
    validate_grid_spec(spec);
    if (y_samples < 64) throw ValidationError("y_samples too small");

    const double x_extent = std::max(std::abs(spec.x_min), std::abs(spec.x_max));
    const double y_half = 2.0 * x_extent + 8.0;

    auto evaluate = [&](int ny) {
        WignerGrid grid = make_grid(spec);
        const double dy = 2.0 * y_half / ny;
        const int np = spec.np;
        parallel_rows(spec.nx, [&](int lo, int hi) {
            std::vector<std::complex<double>> kernel(ny);
            for (int ix = lo; ix < hi; ++ix) {
                const double x = grid.x_at(ix);
                for (int m = 0; m < ny; ++m) {
                    const double y = -y_half + (m + 0.5) * dy;
                    kernel[m] = psi(x - y) * std::conj(psi(x + y));
                }
                for (int ip = 0; ip < np; ++ip) {
                    const double p = grid.p_at(ip);
                    // e^{2ipy} advanced by a stable rotation recurrence.
                    const std::complex<double> step =
                        std::exp(std::complex<double>(0.0, 2.0 * p * dy));
                    std::complex<double> rot =
                        std::exp(std::complex<double>(0.0, 2.0 * p * (-y_half + 0.5 * dy)));
                    std::complex<double> sum = 0.0;
                    for (int m = 0; m < ny; ++m) {
                        sum += kernel[m] * rot;
                        rot *= step;
                    }
                    grid.at(ix, ip) = sum.real() * dy / constants::pi;
                }
            }
        });
        return grid;
    };

    WignerGrid coarse = evaluate(y_samples);
    WignerGrid fine = evaluate(2 * y_samples);
    double max_diff = 0.0;
    for (size_t i = 0; i < fine.values.size(); ++i)
        max_diff = std::max(max_diff, std::abs(fine.values[i] - coarse.values[i]));
    if (max_diff > 1e-6) {
        std::ostringstream msg;
        msg << "y quadrature not converged: doubling resolution moved values by "
            << max_diff;
        throw ConvergenceError(msg.str());
    }
    return fine;
}

std::function<std::complex<double>(double)> coherent_wavefunction(
    std::complex<double> alpha) {
    // <x|alpha> in hbar = m = omega = 1 units, centered at sqrt(2) Re alpha.
    const double xc = std::sqrt(2.0) * alpha.real();
    const double pc = std::sqrt(2.0) * alpha.imag();
    const double norm = std::pow(constants::pi, -0.25);
    const double static_phase = -alpha.real() * alpha.imag();
    return [=](double x) {
        const double dxc = x - xc;
        return norm * std::exp(std::complex<double>(-0.5 * dxc * dxc,
                                                    pc * x + static_phase));
    };
}

std::function<std::complex<double>(double)> cat_wavefunction(const CatState& state) {
    auto psi0 = coherent_wavefunction(state.alpha0);
    auto psi1 = coherent_wavefunction(state.alpha1);
    const std::complex<double> w0 = state.w0;
    const std::complex<double> w1 = state.w1;
    return [=](double x) { return w0 * psi0(x) + w1 * psi1(x); };
}

namespace {

// Builds the full term list for the thermal average at a given quadrature
// order and reports the summed trace of the unnormalized operators.
std::vector<detail::CrossTerm> thermal_terms(double kappa, double phase, double theta,
                                             double n_bar, int quad_order,
                                             double& trace_out) {
    std::vector<double> nodes, weights;
    gauss_hermite(quad_order, nodes, weights);

    std::vector<detail::CrossTerm> terms;
    terms.reserve(static_cast<size_t>(quad_order) * quad_order * 4);
    const double scale = std::sqrt(n_bar);
    std::complex<double> trace = 0.0;
    for (int j = 0; j < quad_order; ++j) {
        for (int k = 0; k < quad_order; ++k) {
            const std::complex<double> beta(scale * nodes[j], scale * nodes[k]);
            const double q = weights[j] * weights[k];
            const EvolvedAmplitudes ev = evolve_amplitudes(kappa, beta, phase);
            const double phi = ev.kerr_phase + ev.cross_phase + theta;

            CatState unnorm;
            unnorm.alpha0 = ev.phi0;
            unnorm.alpha1 = ev.phi1;
            unnorm.phase = phi;
            unnorm.w0 = 0.5;
            unnorm.w1 = 0.5 * std::exp(std::complex<double>(0.0, phi));
            auto node_terms = detail::cat_terms(unnorm, 1.0, std::sqrt(q));
            for (const auto& t : node_terms) trace += t.coeff;
            terms.insert(terms.end(), node_terms.begin(), node_terms.end());
        }
    }
    trace_out = trace.real();
    return terms;
}

double probe_value(const std::vector<detail::CrossTerm>& terms, double trace, double x,
                   double p) {
    const std::complex<double> z(kInvSqrt2 * x, kInvSqrt2 * p);
    std::complex<double> sum = 0.0;
    for (const auto& t : terms)
        sum += t.coeff * std::exp(-2.0 * (z - t.left) * (std::conj(z) - std::conj(t.right)));
    return sum.real() / (constants::pi * trace);
}

} // namespace

WignerGrid wigner_thermal(double kappa, double phase, double theta, double n_bar,
                          const GridSpec& spec, int quad_order) {
    if (n_bar < 0.0) throw ValidationError("n_bar must be non-negative");
    if (quad_order < 8)
        throw ValidationError("quadrature order must be at least 8 per axis");

    if (n_bar == 0.0) {
        const Projection proj = project_photon(evolve_amplitudes(kappa, 0.0, phase), theta);
        return wigner_cat(proj.state, spec);
    }

    double trace = 0.0;
    auto terms = thermal_terms(kappa, phase, theta, n_bar, quad_order, trace);
    if (!(trace > 0.0))
        throw ConvergenceError("thermal average produced a non-positive trace");

    // Convergence gate: probe a sparse sub-grid at a higher order; the full
    // grid is only evaluated once the probes are stable.
    double trace_hi = 0.0;
    auto terms_hi = thermal_terms(kappa, phase, theta, n_bar, quad_order + 8, trace_hi);
    double probe_diff = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double x = spec.x_min + (i + 0.5) * (spec.x_max - spec.x_min) / 5.0;
            const double p = spec.p_min + (j + 0.5) * (spec.p_max - spec.p_min) / 5.0;
            probe_diff = std::max(probe_diff,
                                  std::abs(probe_value(terms, trace, x, p) -
                                           probe_value(terms_hi, trace_hi, x, p)));
        }
    }
    if (probe_diff > 1e-6) {
        std::ostringstream msg;
        msg << "beta quadrature not converged at order " << quad_order
            << " (probe deviation " << probe_diff << ")";
        throw ConvergenceError(msg.str());
    }

    WignerGrid grid = make_grid(spec);
    detail::accumulate_terms(terms, grid);
    for (double& v : grid.values) v /= trace;
    grid.max_imag_residue /= trace;

    if (std::abs(grid.integral() - 1.0) > 1e-3)
        throw ValidationError("grid too small for thermal state; widen the bounds");
    return grid;
}

double negativity(const WignerGrid& grid) {
    const double cell = grid.dx * grid.dp;
    double total = 0.0, abs_total = 0.0, neg_total = 0.0;
    for (double v : grid.values) {
        total += v;
        abs_total += std::abs(v);
        if (v < 0.0) neg_total += -v;
    }
    total *= cell;
    abs_total *= cell;
    neg_total *= cell;

    if (std::abs(total - 1.0) > 1e-3)
        throw ValidationError("negativity requires a normalized grid (trace within 1e-3)");

    const double form_a = 2.0 * neg_total;       // sum (|W| - W) dx dp
    const double form_b = abs_total - 1.0;       // sum |W| dx dp - 1
    if (std::abs(form_a - form_b) > 1e-9)
        throw ConvergenceError("negativity routes disagree beyond 1e-9");
    return form_a;
}

CatState rotate_state(const CatState& state, double angle) {
    const std::complex<double> rot = std::exp(std::complex<double>(0.0, -angle));
    CatState out = state;
    out.alpha0 = state.alpha0 * rot;
    out.alpha1 = state.alpha1 * rot;
    return out;
}

void gauss_hermite(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    if (order < 1) throw ValidationError("Gauss-Hermite order must be positive");
    nodes.assign(order, 0.0);
    weights.assign(order, 0.0);
    const double pim4 = 0.7511255444649425; // pi^{-1/4}
    const int m = (order + 1) / 2;
    double z = 0.0, pp = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * order + 1.0) -
                1.85575 * std::pow(2.0 * order + 1.0, -1.0 / 6.0);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(order), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * nodes[1];
        else
            z = 2.0 * z - nodes[i - 2];

        for (int it = 0; it < 100; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * order) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        nodes[i] = z;
        nodes[order - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[order - 1 - i] = weights[i];
    }
}

} // namespace catwig
