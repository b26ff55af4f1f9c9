// wigner.hpp — photon-projected cantilever states, Wigner functions and
// integrated negativity.
//
// Everything here works in dimensionless phase-space units hbar = m =
// omega_c = 1; a coherent amplitude alpha sits at (x, p) =
// (sqrt(2) Re alpha, sqrt(2) Im alpha). Conversion to SI happens only at the
// CLI boundary.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "catwig/dynamics.hpp"
#include "catwig/errors.hpp"

namespace catwig {

// Conditional cantilever state after projecting the photon: a normalized
// superposition w0|alpha0> + w1|alpha1> with w1/w0 = e^{i phase}.
struct CatState {
    std::complex<double> alpha0;
    std::complex<double> alpha1;
    std::complex<double> w0;
    std::complex<double> w1;
    double phase = 0.0; // kerr_phase + cross_phase + theta
};

struct Projection {
    CatState state;
    double success_probability = 0.0; // (1 + v cos(total phase))/2
};

// Rectangular midpoint-sampled phase-space grid. Sample i of the x axis sits
// at x_min + (i + 1/2) dx, likewise for p; values are row-major with x outer.
struct GridSpec {
    double x_min = 0.0, x_max = 0.0;
    double p_min = 0.0, p_max = 0.0;
    int nx = 0, np = 0;
};

struct WignerGrid {
    GridSpec spec;
    double dx = 0.0, dp = 0.0;
    std::vector<double> values; // size nx*np, index ix*np + ip
    double max_imag_residue = 0.0;

    double x_at(int ix) const { return spec.x_min + (ix + 0.5) * dx; }
    double p_at(int ip) const { return spec.p_min + (ip + 0.5) * dp; }
    double& at(int ix, int ip) { return values[static_cast<size_t>(ix) * spec.np + ip]; }
    double at(int ix, int ip) const {
        return values[static_cast<size_t>(ix) * spec.np + ip];
    }
    double integral() const; // sum W dx dp
};

// Symmetric square grid spanning +-(sqrt(2)|alpha|_max + 6) with n samples
// per axis; wide enough that all normalization gates pass.
GridSpec default_grid(double alpha_max, int n = 512);

// Largest coherent amplitude that carries non-negligible weight in the
// thermally averaged state: the zero-beta swing plus the beta tail out to
// where the Gaussian measure drops below ~1e-12. Feed this to default_grid
// so the trace gates in wigner_thermal and negativity hold.
double thermal_alpha_max(double kappa, double phase, double n_bar);

// Projects the photon onto (|0,1> + e^{i theta}|1,0>)/sqrt(2), conditioning
// the cantilever on that detection. Throws DomainError when the projection
// probability falls below 1e-12 (near-null post-selection).
Projection project_photon(const EvolvedAmplitudes& ev, double theta);

// Closed-form Wigner function of a two-coherent-state superposition: two
// Gaussian lobes plus an oscillatory interference term at their midpoint.
// Throws ValidationError when the grid is too small (normalization deviates
// by more than 1e-3), with suggested bounds in the message.
WignerGrid wigner_cat(const CatState& state, const GridSpec& grid);

// Direct quadrature of W(x,p) = (1/pi) Int dy psi(x-y) conj(psi(x+y)) e^{2ipy}
// for a pure state with position wavefunction psi. Serves as the independent
// oracle for wigner_cat. Throws ConvergenceError if doubling the y resolution
// still moves the result by more than 1e-6.
WignerGrid wigner_numeric(const std::function<std::complex<double>(double)>& psi,
                          const GridSpec& grid, int y_samples = 2048);

// Position wavefunctions used with wigner_numeric.
std::function<std::complex<double>(double)> coherent_wavefunction(
    std::complex<double> alpha);
std::function<std::complex<double>(double)> cat_wavefunction(const CatState& state);

// Thermally averaged projected Wigner function: unnormalized projected
// operators are averaged over the Gaussian beta measure of mean occupation
// n_bar by Gauss-Hermite quadrature (order per axis), then renormalized once.
// At n_bar = 0 this reproduces the pure projected state exactly.
WignerGrid wigner_thermal(double kappa, double phase, double theta, double n_bar,
                          const GridSpec& grid, int quad_order = 20);

// Integrated negativity, Eq-style dual route:
// sum (|W| - W) dx dp and sum |W| dx dp - 1 must agree within 1e-9.
// Throws ValidationError when the grid trace deviates from 1 by more than 1e-3.
double negativity(const WignerGrid& grid);

// Same cat state with every amplitude advanced by a free-evolution angle
// (alpha -> alpha e^{-i angle}); weights are untouched.
CatState rotate_state(const CatState& state, double angle);

// Physicists' Gauss-Hermite nodes and weights for Int e^{-u^2} f(u) du.
void gauss_hermite(int order, std::vector<double>& nodes, std::vector<double>& weights);

namespace detail {
// Evaluates sum_ij c_ij exp(-2(z - a_i)(conj(z) - conj(a_j))) over the grid,
// adding into out.values. Used by the cat, thermal and decohered builders.
struct CrossTerm {
    std::complex<double> coeff;  // c_i conj(c_j) * overlap(i, j)
    std::complex<double> left;   // alpha_i
    std::complex<double> right;  // alpha_j
};
void accumulate_terms(const std::vector<CrossTerm>& terms, WignerGrid& out);
std::complex<double> coherent_overlap(std::complex<double> bra,
                                      std::complex<double> ket);
std::vector<CrossTerm> cat_terms(const CatState& state, double cross_scale = 1.0,
                                 std::complex<double> weight_scale = 1.0);
} // namespace detail

} // namespace catwig
