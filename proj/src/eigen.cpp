#include "ppb/eigen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ppb/errors.hpp"

namespace ppb {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

} // namespace

double BarrierParams::beta() const { return std::sqrt(m * gamma / hbar); }
double BarrierParams::beta_tilde() const { return 1.0 / std::sqrt(m * gamma * hbar); }

void BarrierParams::validate() const {
    check_positive(m, "m");
    check_positive(gamma, "gamma");
    check_positive(hbar, "hbar");
    if (!std::isfinite(V0)) throw std::invalid_argument("V0 must be finite");
}

double OscillatorParams::alpha() const { return std::sqrt(m * omega / hbar); }

void OscillatorParams::validate() const {
    check_positive(m, "m");
    check_positive(omega, "omega");
    check_positive(hbar, "hbar");
    if (!std::isfinite(V0)) throw std::invalid_argument("V0 must be finite");
}

GridSpec GridSpec::linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (!(hi > lo)) throw std::invalid_argument("grid needs hi > lo");
    return GridSpec{lo, (hi - lo) / static_cast<double>(count - 1), count};
}

namespace eigen {

namespace {

void check_grid(const GridSpec& grid) {
    if (grid.count < 5)
        throw std::invalid_argument("grid needs at least 5 points for the central stencil");
    if (!(grid.dx > 0.0)) throw std::invalid_argument("grid needs dx > 0");
}

// dx * scale^2 * max|x| <= 0.1 keeps the quadratic phase resolved.
void check_phase_resolution(const GridSpec& grid, double scale) {
    const double xm = std::max(std::abs(grid.x0), std::abs(grid.x_max()));
    if (grid.dx * scale * scale * xm > 0.1)
        throw std::invalid_argument("grid too coarse for the quadratic phase: "
                                    "dx * beta^2 * max|x| > 0.1");
}

Complex ipow_minus_i(std::size_t n) {
    // (-i)^n, exact.
    switch (n % 4) {
        case 0: return Complex(1.0, 0.0);
        case 1: return Complex(0.0, -1.0);
        case 2: return Complex(-1.0, 0.0);
        default: return Complex(0.0, 1.0);
    }
}

} // namespace

Complex eigenvalue(Branch branch, std::size_t n, const BarrierParams& params) {
    params.validate();
    const double width = (static_cast<double>(n) + 0.5) * params.hbar * params.gamma;
    return Complex(params.V0, -branch_sign(branch) * width);
}

Complex normalization_B(Branch branch, std::size_t n, const BarrierParams& params) {
    params.validate();
    // B^2 = beta / ((+-2i)^n n! sqrt(+- i pi)): the denominator is exactly the
    // orthogonality diagonal, which is what makes <u^-+ | u^+-> = delta.
    return std::sqrt(params.beta() / quad::orthogonality_diagonal(n, branch));
}

Complex normalization_B_tilde(Branch branch, std::size_t n, const BarrierParams& params) {
    params.validate();
    return ipow_minus_i(n) *
           std::sqrt(params.beta_tilde() / quad::orthogonality_diagonal(n, opposite(branch)));
}

Complex eigenfunction_x(Branch branch, std::size_t n, const BarrierParams& params,
                        double x) {
    const double beta = params.beta();
    const double xi = beta * x;
    const Complex phase = std::exp(Complex(0.0, branch_sign(branch) * 0.5 * xi * xi));
    return normalization_B(branch, n, params) * phase *
           polys::hermite_like_eval(branch, n, Complex(xi));
}

Complex eigenfunction_p(Branch branch, std::size_t n, const BarrierParams& params,
                        double p) {
    const double bt = params.beta_tilde();
    const double xi = bt * p;
    const Complex phase = std::exp(Complex(0.0, -branch_sign(branch) * 0.5 * xi * xi));
    return normalization_B_tilde(branch, n, params) * phase *
           polys::hermite_like_eval(opposite(branch), n, Complex(xi));
}

EigenState make_state(Branch branch, std::size_t n, const BarrierParams& params) {
    return EigenState{branch, n, params, eigenvalue(branch, n, params),
                      normalization_B(branch, n, params)};
}

GridSpec default_grid_x(const BarrierParams& params) {
    const double L = 4.0 / params.beta();
    return GridSpec::linspace(-L, L, 8001);
}

GridSpec default_grid_p(const BarrierParams& params) {
    const double L = 4.0 / params.beta_tilde();
    return GridSpec::linspace(-L, L, 8001);
}

double hamiltonian_residual_x(Branch branch, std::size_t n, const BarrierParams& params,
                              const GridSpec& grid) {
    params.validate();
    check_grid(grid);
    check_phase_resolution(grid, params.beta());
    const Complex E = eigenvalue(branch, n, params);
    std::vector<Complex> u(grid.count);
    double u_max = 0.0;
    for (std::size_t i = 0; i < grid.count; ++i) {
        u[i] = eigenfunction_x(branch, n, params, grid.x(i));
        u_max = std::max(u_max, std::abs(u[i]));
    }
    const double kin = -params.hbar * params.hbar / (2.0 * params.m);
    const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
    double r_max = 0.0;
    for (std::size_t i = 1; i + 1 < grid.count; ++i) {
        const double x = grid.x(i);
        const Complex lap = (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_dx2;
        const double V = params.V0 - 0.5 * params.m * params.gamma * params.gamma * x * x;
        const Complex residual = kin * lap + V * u[i] - E * u[i];
        r_max = std::max(r_max, std::abs(residual));
    }
    return r_max / u_max;
}

double hamiltonian_residual_p(Branch branch, std::size_t n, const BarrierParams& params,
                              const GridSpec& grid) {
    params.validate();
    check_grid(grid);
    check_phase_resolution(grid, params.beta_tilde());
    const Complex E = eigenvalue(branch, n, params);
    std::vector<Complex> u(grid.count);
    double u_max = 0.0;
    for (std::size_t i = 0; i < grid.count; ++i) {
        u[i] = eigenfunction_p(branch, n, params, grid.x(i));
        u_max = std::max(u_max, std::abs(u[i]));
    }
    // H~ = p^2/2m + V0 + (m gamma^2 hbar^2 / 2) d^2/dp^2
    const double curv = 0.5 * params.m * params.gamma * params.gamma * params.hbar * params.hbar;
    const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
    double r_max = 0.0;
    for (std::size_t i = 1; i + 1 < grid.count; ++i) {
        const double p = grid.x(i);
        const Complex lap = (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_dx2;
        const Complex residual =
            (p * p / (2.0 * params.m) + params.V0) * u[i] + curv * lap - E * u[i];
        r_max = std::max(r_max, std::abs(residual));
    }
    return r_max / u_max;
}

const std::vector<double>& fourier_eps_schedule() {
    static const std::vector<double> schedule = {1e-1, 5e-2, 2.5e-2, 1.25e-2, 6.25e-3, 3.125e-3};
    return schedule;
}

double fourier_map_residual(Branch branch, std::size_t n, const BarrierParams& params,
                            const std::vector<double>& eps_schedule) {
    params.validate();
    if (n > 10)
        throw std::invalid_argument("fourier map residual supports n <= 10");
    const double beta = params.beta();
    const double bt = params.beta_tilde();
    const double sign = branch_sign(branch);
    // H^+-_n(beta x) as a polynomial in x.
    const ComplexPolynomial& h = polys::hermite_like_coeffs(branch, n);
    std::vector<Complex> coeffs(h.coeffs());
    double scale = 1.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        coeffs[k] *= scale;
        scale *= beta;
    }
    const ComplexPolynomial poly{std::move(coeffs)};
    const Complex B = normalization_B(branch, n, params);
    const double norm = 1.0 / std::sqrt(2.0 * kPi * params.hbar);

    const std::size_t p_count = 25;
    const double p_max = 3.0 / bt;
    double r_max = 0.0;
    double u_max = 0.0;
    for (std::size_t ip = 0; ip < p_count; ++ip) {
        const double p = -p_max + 2.0 * p_max * static_cast<double>(ip) /
                                      static_cast<double>(p_count - 1);
        std::vector<Complex> values;
        values.reserve(eps_schedule.size());
        const Complex b(0.0, -p / params.hbar);
        // Damping relative to the phase scale beta^2 keeps the extrapolation
        // error independent of the unit system.
        for (double eps : eps_schedule) {
            const Complex a(beta * beta * Complex(-eps, sign));
            values.push_back(quad::moment_integral_linear(poly, a, b));
        }
        const Complex transformed =
            B * norm * quad::extrapolate_to_zero(eps_schedule, values).value;
        const Complex expected = eigenfunction_p(branch, n, params, p);
        r_max = std::max(r_max, std::abs(transformed - expected));
        u_max = std::max(u_max, std::abs(expected));
    }
    return r_max / u_max;
}

double HOState::value(double x) const {
    const double alpha = params.alpha();
    const double xi = alpha * x;
    return norm * std::exp(-0.5 * xi * xi) * polys::hermite_eval(n, xi);
}

HOState ho_eigenpair(std::size_t n, const OscillatorParams& params) {
    params.validate();
    if (n > polys::kDegreeCap)
        throw capacity_error("oscillator index exceeds degree cap");
    const double energy = params.V0 + (static_cast<double>(n) + 0.5) * params.hbar * params.omega;
    double factor = 1.0; // 2^n n!
    for (std::size_t k = 1; k <= n; ++k) factor *= 2.0 * static_cast<double>(k);
    const double norm = std::sqrt(params.alpha() / (factor * std::sqrt(kPi)));
    return HOState{n, params, energy, norm};
}

double ho_overlap(std::size_t m, std::size_t n, const OscillatorParams& params) {
    const HOState sm = ho_eigenpair(m, params);
    const HOState sn = ho_eigenpair(n, params);
    // <u_m, u_n> = N_m N_n / alpha * integral H_m(xi) H_n(xi) e^{-xi^2} dxi
    const ComplexPolynomial product = polys::hermite_coeffs(m) * polys::hermite_coeffs(n);
    const Complex integral = quad::moment_integral(product, Complex(-2.0, 0.0));
    return sm.norm * sn.norm / params.alpha() * integral.real();
}

SampledField sample_eigenfunction_x(Branch branch, std::size_t n,
                                    const BarrierParams& params, const GridSpec& grid) {
    SampledField f{grid, {}};
    f.values.reserve(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i)
        f.values.push_back(eigenfunction_x(branch, n, params, grid.x(i)));
    return f;
}

SampledField sample_eigenfunction_p(Branch branch, std::size_t n,
                                    const BarrierParams& params, const GridSpec& grid) {
    SampledField f{grid, {}};
    f.values.reserve(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i)
        f.values.push_back(eigenfunction_p(branch, n, params, grid.x(i)));
    return f;
}

} // namespace eigen
} // namespace ppb
