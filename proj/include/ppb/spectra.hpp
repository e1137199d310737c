#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ppb/dynamics.hpp"
#include "ppb/eigen.hpp"

namespace ppb {
namespace spectra {

// Resonance half-width Gamma_n = (n + 1/2) hbar gamma.
double half_width(std::size_t n, const BarrierParams& params);

// Energy amplitude, the t->E transform (1/sqrt(2 pi hbar)) integral T(t) e^{i E t / hbar} dt:
//   T~^+-_n(E) = (+- i / sqrt(pi)) sqrt(Gamma_n) / (E - V0 +- i Gamma_n),
// scaled by 1/sqrt(2) in Combined mode. Pole at E = V0 -+ i Gamma_n.
Complex energy_amplitude(Branch branch, std::size_t n, const BarrierParams& params,
                         double E, TimeMode mode = TimeMode::Separate);
Complex amplitude_pole(Branch branch, std::size_t n, const BarrierParams& params);

// T~^-_n(E) + T~^+_n(E); real for real E.
Complex amplitude_sum(std::size_t n, const BarrierParams& params, double E,
                      TimeMode mode = TimeMode::Combined);

// |T~^+-_n(E)|^2 in Separate mode: the Breit-Wigner line
//   (1/pi) Gamma_n / ((E - V0)^2 + Gamma_n^2).
double breit_wigner(std::size_t n, const BarrierParams& params, double E);

// |T~^-_n(E) + T~^+_n(E)|^2 in Combined mode:
//   (2/pi) Gamma_n^3 / ((E - V0)^2 + Gamma_n^2)^2.
// Peak 2/(pi Gamma_n) (twice the Breit-Wigner peak); falls to quarter-peak at
// |E - V0| = Gamma_n.
double combined_line_shape(std::size_t n, const BarrierParams& params, double E);

// Time-energy uncertainty product spread(t) * Gamma_n, assembled from the
// lifetime and half-width operations (not hard-coded); equals hbar / 2.
double uncertainty_product(std::size_t n, const BarrierParams& params);

// Sampled line profile around V0.
struct LineShape {
    GridSpec grid; // energy axis
    std::vector<double> values;
    std::size_t n;
    TimeMode mode;
    double gamma_n; // half-width
};
// window_halfwidth and spacing in units of Gamma_n.
LineShape sample_line_shape(std::size_t n, const BarrierParams& params, TimeMode mode,
                            double window_in_gamma = 20.0, std::size_t points = 4096);

// Trapezoidal mass over an adaptively extended window: the window grows until
// the analytic tail remainder drops below tail_tolerance, then the trapezoid
// alone is returned. Approximately 1 for both modes.
double normalization_mass(std::size_t n, const BarrierParams& params, TimeMode mode,
                          double tail_tolerance = 5e-4);

// Trapezoidal mass of a sampled shape plus the analytic tail beyond its window.
double line_shape_mass(const LineShape& shape);

// Full width at half maximum measured from samples (linear interpolation at
// the half-peak crossings). Expect 2 Gamma_n for the Separate mode.
double measured_fwhm(const LineShape& shape);

// Max over |E - V0| <= 10 Gamma_n of |DFT[T](E) - T~(E)| / max |T~|, where
// DFT[T] is the trapezoidal Riemann sum of the e^{+i E t / hbar} transform
// over the branch support truncated at window_T. Requires window_T >=
// 20 / ((2n+1) gamma) and samples a power of two >= 2^14 (throws
// std::invalid_argument otherwise).
double dft_cross_check(Branch branch, std::size_t n, const BarrierParams& params,
                       double window_T, std::size_t samples);

// Energy-domain norm integral |T~|^2 dE by tangent-substitution quadrature
// (compare with dynamics::time_norm_quadrature; both are 1).
double energy_norm_quadrature(Branch branch, std::size_t n, const BarrierParams& params,
                              std::size_t panels = 8192);

} // namespace spectra
} // namespace ppb
