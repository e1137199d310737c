#include "ppb/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ppb/errors.hpp"

namespace ppb {
namespace spectra {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

// Mass of the profile inside [V0 - W, V0 + W], in closed form.
double window_mass(TimeMode mode, double gamma_n, double W) {
    const double r = W / gamma_n;
    if (mode == TimeMode::Separate) return 2.0 / kPi * std::atan(r);
    return 2.0 / kPi * (r / (1.0 + r * r) + std::atan(r));
}

} // namespace

double half_width(std::size_t n, const BarrierParams& params) {
    params.validate();
    return (static_cast<double>(n) + 0.5) * params.hbar * params.gamma;
}

Complex energy_amplitude(Branch branch, std::size_t n, const BarrierParams& params,
                         double E, TimeMode mode) {
    const double sign = branch_sign(branch);
    const double gamma_n = half_width(n, params);
    const Complex numerator(0.0, sign * std::sqrt(gamma_n / kPi));
    const Complex denominator(E - params.V0, sign * gamma_n);
    const Complex amp = numerator / denominator;
    return mode == TimeMode::Separate ? amp : amp / std::sqrt(2.0);
}

Complex amplitude_pole(Branch branch, std::size_t n, const BarrierParams& params) {
    return Complex(params.V0, -branch_sign(branch) * half_width(n, params));
}

Complex amplitude_sum(std::size_t n, const BarrierParams& params, double E, TimeMode mode) {
    return energy_amplitude(Branch::Minus, n, params, E, mode) +
           energy_amplitude(Branch::Plus, n, params, E, mode);
}

double breit_wigner(std::size_t n, const BarrierParams& params, double E) {
    const double gamma_n = half_width(n, params);
    const double d = E - params.V0;
    return gamma_n / (kPi * (d * d + gamma_n * gamma_n));
}

double combined_line_shape(std::size_t n, const BarrierParams& params, double E) {
    const double gamma_n = half_width(n, params);
    const double d = E - params.V0;
    const double lorentz = d * d + gamma_n * gamma_n;
    return 2.0 / kPi * gamma_n * gamma_n * gamma_n / (lorentz * lorentz);
}

double uncertainty_product(std::size_t n, const BarrierParams& params) {
    // Assembled from the verified time and energy moments, not hard-coded.
    return dynamics::mean_lifetime(Branch::Plus, n, params).spread * half_width(n, params);
}

LineShape sample_line_shape(std::size_t n, const BarrierParams& params, TimeMode mode,
                            double window_in_gamma, std::size_t points) {
    params.validate();
    if (points < 5) throw std::invalid_argument("line shape needs at least 5 points");
    if (!(window_in_gamma > 0.0))
        throw std::invalid_argument("line shape window must be positive");
    const double gamma_n = half_width(n, params);
    const double W = window_in_gamma * gamma_n;
    const GridSpec grid = GridSpec::linspace(params.V0 - W, params.V0 + W, points);
    LineShape shape{grid, {}, n, mode, gamma_n};
    shape.values.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double E = grid.x(i);
        shape.values.push_back(mode == TimeMode::Separate
                                   ? breit_wigner(n, params, E)
                                   : combined_line_shape(n, params, E));
    }
    return shape;
}

double line_shape_mass(const LineShape& shape) {
    double acc = 0.5 * (shape.values.front() + shape.values.back());
    for (std::size_t i = 1; i + 1 < shape.values.size(); ++i) acc += shape.values[i];
    const double trapezoid = acc * shape.grid.dx;
    const double center = 0.5 * (shape.grid.x0 + shape.grid.x_max());
    const double W = shape.grid.x_max() - center;
    return trapezoid + (1.0 - window_mass(shape.mode, shape.gamma_n, W));
}

double normalization_mass(std::size_t n, const BarrierParams& params, TimeMode mode,
                          double tail_tolerance) {
    params.validate();
    if (!(tail_tolerance > 0.0))
        throw std::invalid_argument("tail tolerance must be positive");
    const double gamma_n = half_width(n, params);
    // Extend the window until the analytic tail remainder is negligible, then
    // report the bare trapezoid. Spacing stays fixed so the count grows with
    // the window.
    double window_in_gamma = 20.0;
    while (1.0 - window_mass(mode, gamma_n, window_in_gamma * gamma_n) > tail_tolerance) {
        window_in_gamma *= 2.0;
        if (window_in_gamma > 1e7)
            throw numerical_error("normalization window failed to close");
    }
    const double spacing_in_gamma = 0.02;
    const auto points =
        static_cast<std::size_t>(2.0 * window_in_gamma / spacing_in_gamma) + 1;
    const LineShape shape = sample_line_shape(n, params, mode, window_in_gamma, points);
    double acc = 0.5 * (shape.values.front() + shape.values.back());
    for (std::size_t i = 1; i + 1 < shape.values.size(); ++i) acc += shape.values[i];
    return acc * shape.grid.dx;
}

double measured_fwhm(const LineShape& shape) {
    const auto& v = shape.values;
    const std::size_t peak =
        static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    if (peak == 0 || peak + 1 == v.size())
        throw std::invalid_argument("line shape peak lies on the window edge");
    const double half = 0.5 * v[peak];
    // Walk outward to the half-peak crossings; linear interpolation between
    // the bracketing samples.
    std::size_t hi = peak;
    while (hi + 1 < v.size() && v[hi + 1] >= half) ++hi;
    if (hi + 1 == v.size())
        throw std::invalid_argument("half-peak crossing outside the sampled window");
    const double frac_hi = (v[hi] - half) / (v[hi] - v[hi + 1]);
    const double e_hi = shape.grid.x(hi) + frac_hi * shape.grid.dx;
    std::size_t lo = peak;
    while (lo > 0 && v[lo - 1] >= half) --lo;
    if (lo == 0)
        throw std::invalid_argument("half-peak crossing outside the sampled window");
    const double frac_lo = (v[lo] - half) / (v[lo] - v[lo - 1]);
    const double e_lo = shape.grid.x(lo) - frac_lo * shape.grid.dx;
    return e_hi - e_lo;
}

double dft_cross_check(Branch branch, std::size_t n, const BarrierParams& params,
                       double window_T, std::size_t samples) {
    params.validate();
    const double lambda = (2.0 * static_cast<double>(n) + 1.0) * params.gamma;
    if (!(window_T >= 20.0 / lambda))
        throw std::invalid_argument("DFT window must cover >= 20 decay times");
    if (!is_power_of_two(samples) || samples < (1u << 14))
        throw std::invalid_argument("DFT needs a power-of-two sample count >= 2^14");

    const double dt = window_T / static_cast<double>(samples - 1);
    const double t0 = branch == Branch::Plus ? 0.0 : -window_T;
    std::vector<Complex> tf(samples);
    for (std::size_t k = 0; k < samples; ++k)
        tf[k] = dynamics::time_factor(branch, n, params, t0 + dt * static_cast<double>(k));

    const double gamma_n = half_width(n, params);
    const double scale = dt / std::sqrt(2.0 * kPi * params.hbar);
    const std::size_t e_count = 257;
    double r_max = 0.0, a_max = 0.0;
    for (std::size_t ie = 0; ie < e_count; ++ie) {
        const double E = params.V0 + gamma_n * (-10.0 + 20.0 * static_cast<double>(ie) /
                                                            static_cast<double>(e_count - 1));
        Complex acc(0.0);
        for (std::size_t k = 0; k < samples; ++k) {
            const double t = t0 + dt * static_cast<double>(k);
            const double w = (k == 0 || k + 1 == samples) ? 0.5 : 1.0;
            acc += w * tf[k] * std::polar(1.0, E * t / params.hbar);
        }
        const Complex numeric = scale * acc;
        const Complex analytic = energy_amplitude(branch, n, params, E);
        r_max = std::max(r_max, std::abs(numeric - analytic));
        a_max = std::max(a_max, std::abs(analytic));
    }
    return r_max / a_max;
}

double energy_norm_quadrature(Branch branch, std::size_t n, const BarrierParams& params,
                              std::size_t panels) {
    params.validate();
    if (panels < 16) throw std::invalid_argument("energy norm needs >= 16 panels");
    // Substitute E = V0 + Gamma tan(u): the Lorentzian tails map to a finite
    // interval and the integrand stays bounded. Midpoint rule avoids the
    // endpoint tangents.
    const double gamma_n = half_width(n, params);
    const double h = kPi / static_cast<double>(panels);
    double acc = 0.0;
    for (std::size_t k = 0; k < panels; ++k) {
        const double u = -0.5 * kPi + (static_cast<double>(k) + 0.5) * h;
        const double c = std::cos(u);
        const double E = params.V0 + gamma_n * std::tan(u);
        const double weight = gamma_n / (c * c);
        acc += std::norm(energy_amplitude(branch, n, params, E)) * weight;
    }
    return acc * h;
}

} // namespace spectra
} // namespace ppb
