#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ppb/polys.hpp"
#include "ppb/quad.hpp"

namespace ppb {

// Physical parameters of the parabolic barrier V(x) = V0 - m gamma^2 x^2 / 2.
// All of m, gamma, hbar must be positive.
struct BarrierParams {
    double m = 1.0;
    double gamma = 1.0;
    double V0 = 0.0;
    double hbar = 1.0;

    // Position-representation scale, beta = sqrt(m gamma / hbar).
    double beta() const;
    // Momentum-representation scale, beta_tilde = 1 / sqrt(m gamma hbar);
    // beta * beta_tilde = 1 / hbar.
    double beta_tilde() const;
    void validate() const; // throws std::invalid_argument on nonpositive m, gamma, hbar
};

// Harmonic-oscillator companion, V(x) = V0 + m omega^2 x^2 / 2.
struct OscillatorParams {
    double m = 1.0;
    double omega = 1.0;
    double V0 = 0.0;
    double hbar = 1.0;

    double alpha() const; // sqrt(m omega / hbar)
    void validate() const;
};

// Uniform 1-D grid: x(i) = x0 + i dx, i = 0 .. count-1.
struct GridSpec {
    double x0 = 0.0;
    double dx = 1.0;
    std::size_t count = 0;

    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    double x_max() const { return x(count == 0 ? 0 : count - 1); }
    static GridSpec linspace(double lo, double hi, std::size_t count);
};

template <typename T>
struct Sampled {
    GridSpec grid;
    std::vector<T> values;
};
using SampledField = Sampled<Complex>;
using SampledRealField = Sampled<double>;

namespace eigen {

// Complex eigenvalue ladder E^+-_n = V0 -+ i (n + 1/2) hbar gamma.
// Plus lies in the lower half-plane (decaying), Minus in the upper (growing).
Complex eigenvalue(Branch branch, std::size_t n, const BarrierParams& params);

// Normalization B^+-_n = ( beta / ((+-2i)^n n! sqrt(+- i pi)) )^{1/2},
// principal branch throughout.
Complex normalization_B(Branch branch, std::size_t n, const BarrierParams& params);

// Position representation u^+-_n(x) = B^+-_n e^{+- i beta^2 x^2/2} H^+-_n(beta x).
Complex eigenfunction_x(Branch branch, std::size_t n, const BarrierParams& params,
                        double x);

// Momentum representation
//   u~^+-_n(p) = B~^+-_n e^{-+ i bt^2 p^2/2} H^-+_n(bt p),
//   B~^+-_n   = (-i)^n ( bt / ((-+2i)^n n! sqrt(-+ i pi)) )^{1/2},
// with bt = beta_tilde. Note the swapped branch of both the polynomial and
// the weight relative to position space.
Complex eigenfunction_p(Branch branch, std::size_t n, const BarrierParams& params,
                        double p);
Complex normalization_B_tilde(Branch branch, std::size_t n, const BarrierParams& params);

// Eigenvalue/normalization bundle.
struct EigenState {
    Branch branch;
    std::size_t n;
    BarrierParams params;
    Complex E;
    Complex B;
};
EigenState make_state(Branch branch, std::size_t n, const BarrierParams& params);

// Max over interior grid points of |(H u)(x_i) - E u(x_i)| / max_i |u(x_i)|,
// H discretized with the second-order central stencil,
// H = -(hbar^2/2m) d^2/dx^2 + V0 - m gamma^2 x^2 / 2.
// Requires count >= 5 and the phase-resolution condition
// dx * beta^2 * max|x| <= 0.1 (throws std::invalid_argument otherwise).
double hamiltonian_residual_x(Branch branch, std::size_t n, const BarrierParams& params,
                              const GridSpec& grid);
GridSpec default_grid_x(const BarrierParams& params); // [-4/beta, 4/beta], 8001 points

// Same residual in momentum space, H~ = p^2/2m + V0 + (m gamma^2 hbar^2 / 2) d^2/dp^2.
double hamiltonian_residual_p(Branch branch, std::size_t n, const BarrierParams& params,
                              const GridSpec& grid);
GridSpec default_grid_p(const BarrierParams& params); // [-4/bt, 4/bt], 8001 points

// Default damping schedule for the regularized Fourier map (six points: the
// degree-5 tableau reaches ~1e-9 where the four-point default would stop at ~1e-4).
const std::vector<double>& fourier_eps_schedule();

// Max over a fixed p-sample of |F[u^+-_n](p) - u~^+-_n(p)| / max |u~^+-_n|,
// where F is the analytic x->p Fourier transform
//   (1/sqrt(2 pi hbar)) integral u(x) e^{-i p x / hbar} dx,
// evaluated through the damped moment engine and extrapolated eps -> 0.
// Requires n <= 10 (throws std::invalid_argument); throws numerical_error if
// the extrapolation fails.
double fourier_map_residual(Branch branch, std::size_t n, const BarrierParams& params,
                            const std::vector<double>& eps_schedule = fourier_eps_schedule());

// Harmonic-oscillator eigenpair: E_n = V0 + (n + 1/2) hbar omega and the
// normalized eigenfunction u_n(x) = N_n e^{-alpha^2 x^2/2} H_n(alpha x).
struct HOState {
    std::size_t n;
    OscillatorParams params;
    double energy;
    double norm; // N_n = (alpha / (2^n n! sqrt(pi)))^{1/2}
    double value(double x) const;
};
HOState ho_eigenpair(std::size_t n, const OscillatorParams& params);

// <u_m, u_n> of the oscillator states through the closed-form moment engine.
double ho_overlap(std::size_t m, std::size_t n, const OscillatorParams& params);

// Grid samples of the eigenfunctions (CLI support).
SampledField sample_eigenfunction_x(Branch branch, std::size_t n,
                                    const BarrierParams& params, const GridSpec& grid);
SampledField sample_eigenfunction_p(Branch branch, std::size_t n,
                                    const BarrierParams& params, const GridSpec& grid);

} // namespace eigen
} // namespace ppb
