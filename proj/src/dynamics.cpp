#include "ppb/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ppb/errors.hpp"

namespace ppb {
namespace dynamics {

namespace {

// Decay rate of |T|^2: lambda_n = (2n+1) gamma.
double rate(std::size_t n, const BarrierParams& params) {
    return (2.0 * static_cast<double>(n) + 1.0) * params.gamma;
}

// theta(+-t) with theta(0) = 1: the branch factors glue continuously at t=0.
bool in_support(Branch branch, double t) {
    return branch == Branch::Plus ? t >= 0.0 : t <= 0.0;
}

// Composite Simpson over [0, length] of f; intervals must be even.
template <typename F>
double simpson(F f, double length, std::size_t intervals) {
    const double h = length / static_cast<double>(intervals);
    double acc = f(0.0) + f(length);
    for (std::size_t i = 1; i < intervals; ++i)
        acc += f(h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

} // namespace

double time_amplitude(std::size_t n, const BarrierParams& params, TimeMode mode) {
    params.validate();
    const double a2 = rate(n, params);
    return std::sqrt(mode == TimeMode::Separate ? a2 : 0.5 * a2);
}

Complex time_factor(Branch branch, std::size_t n, const BarrierParams& params,
                    double t, TimeMode mode) {
    if (!in_support(branch, t)) return Complex(0.0);
    const double A = time_amplitude(n, params, mode);
    const double decay = std::exp(-branch_sign(branch) *
                                  (static_cast<double>(n) + 0.5) * params.gamma * t);
    const Complex phase = std::exp(Complex(0.0, -params.V0 * t / params.hbar));
    return A * decay * phase;
}

Complex wavefunction(Branch branch, std::size_t n, const BarrierParams& params,
                     double t, double x, TimeMode mode) {
    if (!in_support(branch, t)) return Complex(0.0);
    return time_factor(branch, n, params, t, mode) *
           eigen::eigenfunction_x(branch, n, params, x);
}

Complex wavefunction_p(Branch branch, std::size_t n, const BarrierParams& params,
                       double t, double p, TimeMode mode) {
    if (!in_support(branch, t)) return Complex(0.0);
    return time_factor(branch, n, params, t, mode) *
           eigen::eigenfunction_p(branch, n, params, p);
}

double density(Branch branch, std::size_t n, const BarrierParams& params,
               double t, double x, TimeMode mode) {
    if (!in_support(branch, t)) return 0.0;
    const double A = time_amplitude(n, params, mode);
    const double B2 = std::norm(eigen::normalization_B(branch, n, params));
    const double decay = std::exp(-branch_sign(branch) * rate(n, params) * t);
    const double xi = params.beta() * x;
    const double H2 = std::norm(polys::hermite_like_eval(branch, n, Complex(xi)));
    return A * A * B2 * decay * H2;
}

double current(Branch branch, std::size_t n, const BarrierParams& params,
               double t, double x, TimeMode mode) {
    if (!in_support(branch, t)) return 0.0;
    const double sign = branch_sign(branch);
    const double A = time_amplitude(n, params, mode);
    const double B2 = std::norm(eigen::normalization_B(branch, n, params));
    const double decay = std::exp(-sign * rate(n, params) * t);
    const double beta = params.beta();
    const Complex xi(beta * x);
    const Complex h = polys::hermite_like_eval(branch, n, xi);
    double bracket = x * std::norm(h);
    if (n > 0) {
        // H^-+_n = conj(H^+-_n) on the real axis.
        const Complex cross =
            std::conj(h) * polys::hermite_like_eval(branch, n - 1, xi);
        bracket += sign * 2.0 * static_cast<double>(n) / beta * cross.imag();
    }
    return sign * A * A * B2 * decay * params.gamma * bracket;
}

GridSpec default_grid_continuity(const BarrierParams& params) {
    const double L = 4.0 / params.beta();
    return GridSpec::linspace(-L, L, 4001);
}

double continuity_residual(Branch branch, std::size_t n, const BarrierParams& params,
                           const GridSpec& grid, double t, double dt) {
    params.validate();
    if (grid.count < 5)
        throw std::invalid_argument("grid needs at least 5 points for the central stencil");
    if (!(grid.dx > 0.0)) throw std::invalid_argument("grid needs dx > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (grid.dx * params.beta() > 0.02)
        throw std::invalid_argument("grid too coarse for the polynomial scale: dx * beta > 0.02");
    const bool interior = branch == Branch::Plus ? (t - dt > 0.0) : (t + dt < 0.0);
    if (!interior)
        throw std::invalid_argument("t -+ dt must stay strictly inside the branch support");

    double rho_max = 0.0;
    std::vector<double> rho_before(grid.count), rho_after(grid.count), j_now(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.x(i);
        rho_before[i] = density(branch, n, params, t - dt, x);
        rho_after[i] = density(branch, n, params, t + dt, x);
        j_now[i] = current(branch, n, params, t, x);
        rho_max = std::max(rho_max, density(branch, n, params, t, x));
    }
    double r_max = 0.0;
    for (std::size_t i = 1; i + 1 < grid.count; ++i) {
        const double drho_dt = (rho_after[i] - rho_before[i]) / (2.0 * dt);
        const double dj_dx = (j_now[i + 1] - j_now[i - 1]) / (2.0 * grid.dx);
        r_max = std::max(r_max, std::abs(drho_dt + dj_dx));
    }
    return r_max / (rho_max * params.gamma);
}

Complex transition_matrix(std::size_t m, std::size_t n, const BarrierParams& params) {
    params.validate();
    if (m > 10 || n > 10)
        throw capacity_error("transition matrix supports indices up to 10");
    // S_mn = <u^+_m | u^-_n>; xi = beta x pulls out 1/beta.
    const Complex bm = std::conj(eigen::normalization_B(Branch::Plus, m, params));
    const Complex bn = eigen::normalization_B(Branch::Minus, n, params);
    return bm * bn / params.beta() * quad::fresnel_orthogonality(m, n, Branch::Minus);
}

Lifetime mean_lifetime(Branch branch, std::size_t n, const BarrierParams& params) {
    params.validate();
    const double tau = 1.0 / rate(n, params);
    return Lifetime{branch_sign(branch) * tau, tau};
}

Lifetime lifetime_from_quadrature(Branch branch, std::size_t n, const BarrierParams& params) {
    params.validate();
    const double sign_t = branch_sign(branch);
    const double length = 60.0 / rate(n, params);
    const std::size_t intervals = 1u << 16;
    auto f = [&](double s) { return std::norm(time_factor(branch, n, params, sign_t * s)); };
    const double m0 = simpson([&](double s) { return f(s); }, length, intervals);
    const double m1 = simpson([&](double s) { return s * f(s); }, length, intervals);
    const double m2 = simpson([&](double s) { return s * s * f(s); }, length, intervals);
    const double mean_abs = m1 / m0;
    const double spread = std::sqrt(m2 / m0 - mean_abs * mean_abs);
    return Lifetime{sign_t * mean_abs, spread};
}

double time_norm_quadrature(Branch branch, std::size_t n, const BarrierParams& params,
                            TimeMode mode) {
    params.validate();
    const double sign_t = branch_sign(branch);
    const double length = 60.0 / rate(n, params);
    return simpson(
        [&](double s) { return std::norm(time_factor(branch, n, params, sign_t * s, mode)); },
        length, 1u << 16);
}

double growth_decay_balance(std::size_t n, const BarrierParams& params,
                            const GridSpec& grid) {
    params.validate();
    if (grid.count < 2) throw std::invalid_argument("grid needs at least 2 points");
    // Time integrals are analytic exponentials on each branch:
    // integral of e^{-+ (2n+1) gamma t} over the support is 1 / ((2n+1) gamma).
    const double tau = 1.0 / rate(n, params);
    const double A_plus = time_amplitude(n, params, TimeMode::Separate);
    const double A_minus = A_plus;
    const double B2_plus = std::norm(eigen::normalization_B(Branch::Plus, n, params));
    const double B2_minus = std::norm(eigen::normalization_B(Branch::Minus, n, params));
    double r_max = 0.0;
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double xi = params.beta() * grid.x(i);
        const double h2_plus =
            std::norm(polys::hermite_like_eval(Branch::Plus, n, Complex(xi)));
        const double h2_minus =
            std::norm(polys::hermite_like_eval(Branch::Minus, n, Complex(xi)));
        const double plus_side = A_plus * A_plus * B2_plus * h2_plus * tau;
        const double minus_side = A_minus * A_minus * B2_minus * h2_minus * tau;
        if (plus_side == 0.0) {
            if (minus_side != 0.0) return std::numeric_limits<double>::infinity();
            continue;
        }
        r_max = std::max(r_max, std::abs(minus_side - plus_side) / plus_side);
    }
    return r_max;
}

SampledField sample_wavefunction(Branch branch, std::size_t n, const BarrierParams& params,
                                 double t, const GridSpec& grid, TimeMode mode) {
    SampledField f{grid, {}};
    f.values.reserve(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i)
        f.values.push_back(wavefunction(branch, n, params, t, grid.x(i), mode));
    return f;
}

SampledRealField sample_density(Branch branch, std::size_t n, const BarrierParams& params,
                                double t, const GridSpec& grid, TimeMode mode) {
    SampledRealField f{grid, {}};
    f.values.reserve(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i)
        f.values.push_back(density(branch, n, params, t, grid.x(i), mode));
    return f;
}

SampledRealField sample_current(Branch branch, std::size_t n, const BarrierParams& params,
                                double t, const GridSpec& grid, TimeMode mode) {
    SampledRealField f{grid, {}};
    f.values.reserve(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i)
        f.values.push_back(current(branch, n, params, t, grid.x(i), mode));
    return f;
}

} // namespace dynamics
} // namespace ppb
