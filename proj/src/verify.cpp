#include "ppb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "ppb/dynamics.hpp"
#include "ppb/polys.hpp"
#include "ppb/quad.hpp"
#include "ppb/spectra.hpp"

namespace ppb {
namespace verify {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Collector {
    const BarrierParams& params;
    const Options& options;
    std::vector<CheckEntry>& entries;

    void add(const std::string& name, const std::string& detail, double residual,
             double tolerance) {
        const double tol = tolerance * options.scale_for(name);
        entries.push_back(CheckEntry{name, detail, residual, tol, residual <= tol});
    }
};

// ---------------------------------------------------------------- polys ----

const std::vector<Complex>& z_sample() {
    static const std::vector<Complex> zs = {
        Complex(0.0, 0.0),  Complex(0.7, 0.0),  Complex(-1.3, 0.0), Complex(2.2, 0.0),
        Complex(0.5, 0.4),  Complex(-1.1, 0.8), Complex(3.0, -0.6), Complex(-2.4, -1.5),
    };
    return zs;
}

// Condition-aware scale sum |c_k| |z|^k, floor 1.
double poly_scale(const ComplexPolynomial& p, Complex z) {
    double scale = 0.0, zp = 1.0;
    const double az = std::abs(z);
    for (const auto& c : p.coeffs()) {
        scale += std::abs(c) * zp;
        zp *= az;
    }
    return std::max(scale, 1.0);
}

void run_polys(Collector& c) {
    // Reference table H^+_0..H^+_4; the Minus table is its conjugate.
    static const std::vector<std::vector<Complex>> table_plus = {
        {{1.0, 0.0}},
        {{0.0, 0.0}, {2.0, 0.0}},
        {{0.0, -2.0}, {0.0, 0.0}, {4.0, 0.0}},
        {{0.0, 0.0}, {0.0, -12.0}, {0.0, 0.0}, {8.0, 0.0}},
        {{-12.0, 0.0}, {0.0, 0.0}, {0.0, -48.0}, {0.0, 0.0}, {16.0, 0.0}},
    };
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const char* tag = branch == Branch::Plus ? "plus" : "minus";
        double table_diff = 0.0;
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto& h = polys::hermite_like_coeffs(branch, n);
            for (std::size_t k = 0; k <= n; ++k) {
                const Complex expected = branch == Branch::Plus
                                             ? table_plus[n][k]
                                             : std::conj(table_plus[n][k]);
                table_diff = std::max(table_diff, std::abs(h.coeff(k) - expected));
            }
        }
        c.add(std::string("polys.table_match.") + tag,
              "coefficients for n <= 4 match the closed-form table", table_diff, 1e-14);

        double ode = 0.0;
        for (std::size_t n = 0; n <= 20; ++n) {
            const double scale = std::ldexp(1.0, static_cast<int>(n));
            ode = std::max(ode, polys::ode_residual(branch, n).max_abs_coeff() / scale);
        }
        c.add(std::string("polys.ode_residual.") + tag,
              "H'' +- 2i xi H' -+ 2i n H = 0 coefficientwise, n <= 20 (units of 2^n)",
              ode, 1e-10);
    }

    double lead = 0.0, purity = 0.0, conj_diff = 0.0;
    for (std::size_t n = 0; n <= 20; ++n) {
        const auto& hp = polys::hermite_like_coeffs(Branch::Plus, n);
        const auto& hm = polys::hermite_like_coeffs(Branch::Minus, n);
        const double two_n = std::ldexp(1.0, static_cast<int>(n));
        lead = std::max(lead, std::abs(hp.coeff(n) - two_n) / two_n);
        lead = std::max(lead, std::abs(hm.coeff(n) - two_n) / two_n);
        for (std::size_t k = 0; k <= n; ++k) {
            conj_diff = std::max(conj_diff, std::abs(std::conj(hp.coeff(k)) - hm.coeff(k)));
            // Descending from the real leading coefficient, entries alternate
            // pure real / pure imaginary with the step in k of 2.
            const bool real_slot = ((n - k) / 2) % 2 == 0;
            const double off = real_slot ? std::abs(hp.coeff(k).imag())
                                         : std::abs(hp.coeff(k).real());
            purity = std::max(purity, off);
        }
    }
    c.add("polys.leading_coeff", "leading coefficient is exactly 2^n, n <= 20", lead, 0.0);
    c.add("polys.coeff_purity",
          "coefficients alternate pure-real / pure-imaginary slots, n <= 20", purity, 0.0);
    c.add("polys.conjugation", "conj(H^+_n) = H^-_n coefficientwise, n <= 20", conj_diff,
          0.0);

    double parity = 0.0, recur = 0.0, deriv = 0.0;
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto& h = polys::hermite_like_coeffs(Branch::Plus, n);
        const double par_sign = n % 2 == 0 ? 1.0 : -1.0;
        for (Complex z : z_sample()) {
            const double scale = poly_scale(h, z);
            const Complex via_recur = polys::hermite_like_eval(Branch::Plus, n, z);
            parity = std::max(parity,
                              std::abs(polys::hermite_like_eval(Branch::Plus, n, -z) -
                                       par_sign * via_recur) /
                                  scale);
            recur = std::max(recur, std::abs(via_recur - h(z)) / scale);
            deriv = std::max(deriv, std::abs(h.derivative()(z) -
                                             polys::hermite_like_derivative(Branch::Plus, n, z)) /
                                        scale);
        }
    }
    c.add("polys.parity", "H_n(-z) = (-1)^n H_n(z) over a z sample, n <= 12", parity, 1e-13);
    c.add("polys.recurrence_vs_coeffs",
          "three-term recurrence agrees with Horner on the coefficient table", recur, 1e-12);
    c.add("polys.derivative_identity", "dH_n/dz = 2 n H_{n-1}(z)", deriv, 1e-12);

    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const char* tag = branch == Branch::Plus ? "plus" : "minus";
        const double res = polys::generating_function_residual(
            branch, Complex(0.5, 0.25), Complex(0.3, -0.2), 25);
        c.add(std::string("polys.generating_function.") + tag,
              "exp(-+i(2sz - s^2)) = sum H_n(z) (-+is)^n / n!, 26 terms", res, 1e-10);
    }

    double rot = 0.0;
    for (std::size_t n = 0; n <= 4; ++n) {
        for (Branch branch : {Branch::Plus, Branch::Minus}) {
            const double sign = branch_sign(branch);
            const Complex prefactor = std::polar(1.0, sign * kPi / 4.0 * static_cast<double>(n));
            const Complex arg_rot = std::polar(1.0, -sign * kPi / 4.0);
            for (Complex z : {Complex(0.3), Complex(1.1), Complex(2.7)}) {
                // Real Hermite at a rotated complex argument via its table.
                const Complex hn = polys::hermite_coeffs(n)(arg_rot * z);
                const Complex lhs = polys::hermite_like_eval(branch, n, z);
                rot = std::max(rot, std::abs(lhs - prefactor * hn) /
                                        poly_scale(polys::hermite_like_coeffs(branch, n), z));
            }
        }
    }
    c.add("polys.rotation_identity",
          "H^+-_n(z) = (+-i)^{n/2} H_n(e^{-+ i pi/4} z), n <= 4", rot, 1e-12);

    double herm = std::abs(polys::hermite_eval(2, 1.0) - 2.0);
    herm = std::max(herm, std::abs(polys::hermite_eval(0, 0.7) - 1.0));
    herm = std::max(herm, std::abs(polys::hermite_eval(3, 0.5) - (8.0 * 0.125 - 12.0 * 0.5)));
    c.add("polys.hermite_baseline", "real Hermite values agree with the closed forms", herm,
          0.0);
}

// ----------------------------------------------------------------- quad ----

void run_quad(Collector& c) {
    const Complex moment_example =
        quad::moment_integral(ComplexPolynomial::constant(Complex(1.0)), Complex(-1.0, 1.0));
    const Complex expected = std::sqrt(2.0 * kPi / Complex(1.0, -1.0));
    c.add("quad.moment_gaussian",
          "integral e^{(-1+i) x^2/2} dx = sqrt(2 pi / (1 - i))",
          std::abs(moment_example - expected) / std::abs(expected), 1e-15);

    const Complex odd = quad::moment_integral(ComplexPolynomial::monomial(3), Complex(-0.7, 0.4));
    c.add("quad.moment_odd_zero", "odd moments vanish identically", std::abs(odd), 0.0);

    // Hermiticity: integral of conj(p) against conj(a) is the conjugate.
    const ComplexPolynomial p({Complex(0.3, -0.8), Complex(0.0), Complex(1.5, 0.25),
                               Complex(0.0), Complex(-0.7, 2.0)});
    const Complex a(-1.3, 0.9);
    const Complex direct = quad::moment_integral(p, a);
    const Complex mirrored = quad::moment_integral(p.conjugated(), std::conj(a));
    c.add("quad.moment_hermitian", "conjugating coefficients and exponent conjugates the value",
          std::abs(std::conj(direct) - mirrored) / std::abs(direct), 1e-15);

    // Scaling covariance x -> lambda x.
    double scaling = 0.0;
    for (double lambda : {0.5, 2.0}) {
        std::vector<Complex> scaled(p.coeffs());
        double lp = 1.0;
        for (auto& coeff : scaled) {
            coeff *= lp;
            lp *= lambda;
        }
        const Complex lhs = quad::moment_integral(ComplexPolynomial(scaled), a * lambda * lambda);
        scaling = std::max(scaling, std::abs(lhs - direct / lambda) / std::abs(direct / lambda));
    }
    c.add("quad.moment_scaling",
          "substitution x -> lambda x rescales the moment integral by 1/lambda", scaling, 1e-13);

    const Complex sqrt_ipi = std::sqrt(Complex(0.0, kPi));
    const auto fresnel =
        quad::regularized_pairing(ComplexPolynomial::constant(Complex(1.0)), 2.0);
    c.add("quad.fresnel_limit",
          "damped e^{i xi^2} integral extrapolates to sqrt(i pi) (default schedule)",
          std::abs(fresnel.value - sqrt_ipi), 1e-6);

    // Empirical Richardson order: 3-point schedules scale errors as h^3.
    auto err_at = [&](double h) {
        const std::vector<double> sched = {0.2 * h, 0.1 * h, 0.05 * h};
        const auto r = quad::regularized_pairing(ComplexPolynomial::constant(Complex(1.0)),
                                                 2.0, sched);
        return std::abs(r.value - sqrt_ipi);
    };
    const double slope = std::log2(err_at(1.0) / err_at(0.5));
    c.add("quad.fresnel_order", "extrapolation error scales as the 3-point tableau order",
          std::abs(slope - 3.0), 0.8);

    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const char* tag = branch == Branch::Plus ? "plus" : "minus";
        double diag = 0.0, offdiag = 0.0, odd_raw = 0.0;
        std::array<double, 8> root_diag{};
        for (std::size_t n = 0; n < 8; ++n)
            root_diag[n] = std::sqrt(std::abs(quad::orthogonality_diagonal(n, branch)));
        for (std::size_t m = 0; m < 8; ++m) {
            for (std::size_t n = 0; n < 8; ++n) {
                const Complex value = quad::fresnel_orthogonality(m, n, branch);
                if (m == n) {
                    const Complex d = quad::orthogonality_diagonal(n, branch);
                    diag = std::max(diag, std::abs(value - d) / std::abs(d));
                } else if ((m + n) % 2 == 1) {
                    odd_raw = std::max(odd_raw, std::abs(value));
                } else {
                    offdiag = std::max(offdiag,
                                       std::abs(value) / (root_diag[m] * root_diag[n]));
                }
            }
        }
        c.add(std::string("quad.orthogonality_diag.") + tag,
              "pairing diagonal equals (+-2i)^n n! sqrt(+- i pi), n < 8", diag, 1e-9);
        c.add(std::string("quad.orthogonality_offdiag.") + tag,
              "pairing off-diagonals vanish (diagonal-normalized), n < 8", offdiag, 1e-10);
        c.add(std::string("quad.orthogonality_odd.") + tag,
              "odd-parity pairings vanish identically", odd_raw, 0.0);
    }
}

// ---------------------------------------------------------------- eigen ----

void run_eigen(Collector& c) {
    const BarrierParams& params = c.params;
    const double energy_scale = params.hbar * params.gamma;

    double conj_pair = 0.0;
    double ladder = 0.0;
    double prev_im = 0.0;
    for (std::size_t n = 0; n <= 20; ++n) {
        const Complex ep = eigen::eigenvalue(Branch::Plus, n, params);
        const Complex em = eigen::eigenvalue(Branch::Minus, n, params);
        conj_pair = std::max(conj_pair, std::abs(ep - std::conj(em)) / energy_scale);
        const double width = (static_cast<double>(n) + 0.5) * energy_scale;
        ladder = std::max(ladder, std::abs(ep.real() - params.V0) / energy_scale);
        ladder = std::max(ladder, std::abs(ep.imag() + width) / energy_scale);
        if (n > 0 && !(ep.imag() < prev_im)) ladder = std::max(ladder, 1.0);
        prev_im = ep.imag();
    }
    c.add("eigen.conjugate_pairs", "E^+_n = conj(E^-_n), n <= 20", conj_pair, 0.0);
    c.add("eigen.eigenvalue_ladder",
          "E^+_n = V0 - i (n+1/2) hbar gamma with strictly descending widths "
          "(ulp-level: product reassociation only)",
          ladder, 5e-15);

    double b_law = 0.0, b_conj = 0.0;
    double factor = 1.0; // 2^n n!
    for (std::size_t n = 0; n <= 10; ++n) {
        if (n > 0) factor *= 2.0 * static_cast<double>(n);
        const Complex bp = eigen::normalization_B(Branch::Plus, n, params);
        const Complex bm = eigen::normalization_B(Branch::Minus, n, params);
        const double expected = params.beta() / (factor * std::sqrt(kPi));
        b_law = std::max(b_law, std::abs(std::norm(bp) - expected) / expected);
        b_conj = std::max(b_conj, std::abs(std::conj(bp) - bm) / std::abs(bp));
    }
    c.add("eigen.b_norm_law", "|B^+-_n|^2 = beta / (2^n n! sqrt(pi)), n <= 10", b_law, 1e-13);
    c.add("eigen.b_conjugation", "conj(B^+_n) = B^-_n, n <= 10", b_conj, 1e-14);

    double parity = 0.0;
    for (std::size_t n = 0; n <= 6; ++n) {
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        double u_max = 0.0, diff = 0.0;
        for (std::size_t i = 0; i <= 20; ++i) {
            const double x = (-2.0 + 0.2 * static_cast<double>(i)) / params.beta();
            const Complex up = eigen::eigenfunction_x(Branch::Plus, n, params, x);
            const Complex un = eigen::eigenfunction_x(Branch::Plus, n, params, -x);
            u_max = std::max(u_max, std::abs(up));
            diff = std::max(diff, std::abs(un - sign * up));
        }
        parity = std::max(parity, diff / u_max);
    }
    c.add("eigen.eigenfunction_parity", "u_n(-x) = (-1)^n u_n(x), n <= 6", parity, 1e-13);

    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const char* tag = branch == Branch::Plus ? "plus" : "minus";
        double rx = 0.0, rp = 0.0, fr = 0.0;
        for (std::size_t n = 0; n <= 6; ++n) {
            rx = std::max(rx, eigen::hamiltonian_residual_x(branch, n, params,
                                                            eigen::default_grid_x(params)));
            rp = std::max(rp, eigen::hamiltonian_residual_p(branch, n, params,
                                                            eigen::default_grid_p(params)));
            fr = std::max(fr, eigen::fourier_map_residual(branch, n, params));
        }
        c.add(std::string("eigen.hamiltonian_x.") + tag,
              "position-space H u = E u on the default grid, n <= 6 (units of hbar gamma)",
              rx / energy_scale, 1e-4);
        c.add(std::string("eigen.hamiltonian_p.") + tag,
              "momentum-space H u~ = E u~ on the default grid, n <= 6 (units of hbar gamma)",
              rp / energy_scale, 1e-4);
        c.add(std::string("eigen.fourier_map.") + tag,
              "analytic Fourier transform of u_n reproduces u~_n, n <= 6", fr, 1e-6);
    }

    // Second-order convergence of both stencils under dx halving.
    {
        const double L = 4.0 / params.beta();
        const double coarse = eigen::hamiltonian_residual_x(
            Branch::Plus, 2, params, GridSpec::linspace(-L, L, 4001));
        const double fine = eigen::hamiltonian_residual_x(
            Branch::Plus, 2, params, GridSpec::linspace(-L, L, 8001));
        c.add("eigen.hamiltonian_x_order", "central-stencil residual scales as dx^2",
              std::abs(std::log2(coarse / fine) - 2.0), 0.2);
        const double Lp = 4.0 / params.beta_tilde();
        const double coarse_p = eigen::hamiltonian_residual_p(
            Branch::Minus, 2, params, GridSpec::linspace(-Lp, Lp, 4001));
        const double fine_p = eigen::hamiltonian_residual_p(
            Branch::Minus, 2, params, GridSpec::linspace(-Lp, Lp, 8001));
        c.add("eigen.hamiltonian_p_order", "momentum stencil residual scales as dp^2",
              std::abs(std::log2(coarse_p / fine_p) - 2.0), 0.2);
    }

    // Harmonic-oscillator companion at omega = gamma.
    const OscillatorParams ho{params.m, params.gamma, params.V0, params.hbar};
    double ho_ladder = 0.0;
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto state = eigen::ho_eigenpair(n, ho);
        const double expected =
            ho.V0 + (static_cast<double>(n) + 0.5) * ho.hbar * ho.omega;
        ho_ladder = std::max(ho_ladder, std::abs(state.energy - expected));
    }
    c.add("eigen.ho_ladder", "oscillator energies are V0 + (n+1/2) hbar omega", ho_ladder, 0.0);

    double gram = 0.0;
    for (std::size_t m = 0; m < 7; ++m)
        for (std::size_t n = 0; n < 7; ++n)
            gram = std::max(gram, std::abs(eigen::ho_overlap(m, n, ho) - (m == n ? 1.0 : 0.0)));
    c.add("eigen.ho_gram", "oscillator states are orthonormal (7x7 Gram block)", gram, 1e-10);

    // Analytic continuation omega -> -+ i gamma. The continued state equals
    // u^+-_n up to a constant phase: principal square roots in the two
    // normalizations leave an eighth root of unity free.
    double continuation = 0.0, phase_root = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const double sign = branch_sign(branch);
        const Complex alpha_c =
            params.beta() * std::polar(1.0, -sign * kPi / 4.0); // sqrt(-+ i) beta
        for (std::size_t n = 0; n <= 4; ++n) {
            double factor_n = 1.0;
            for (std::size_t k = 1; k <= n; ++k) factor_n *= 2.0 * static_cast<double>(k);
            const Complex norm_c = std::sqrt(alpha_c / (factor_n * std::sqrt(kPi)));
            std::vector<Complex> continued(17), direct(17);
            std::size_t ref = 0;
            for (std::size_t i = 0; i <= 16; ++i) {
                const double x = (-2.0 + 0.25 * static_cast<double>(i)) / params.beta();
                continued[i] = norm_c * std::exp(-0.5 * alpha_c * alpha_c * x * x) *
                               polys::hermite_coeffs(n)(alpha_c * x);
                direct[i] = eigen::eigenfunction_x(branch, n, params, x);
                if (std::abs(continued[i]) > std::abs(continued[ref])) ref = i;
            }
            const Complex phase = direct[ref] / continued[ref];
            Complex phase8(1.0);
            for (int k = 0; k < 8; ++k) phase8 *= phase;
            phase_root = std::max(phase_root, std::abs(phase8 - Complex(1.0)));
            double diff = 0.0, u_max = 0.0;
            for (std::size_t i = 0; i <= 16; ++i) {
                diff = std::max(diff, std::abs(direct[i] - phase * continued[i]));
                u_max = std::max(u_max, std::abs(direct[i]));
            }
            continuation = std::max(continuation, diff / u_max);
        }
    }
    c.add("eigen.ho_continuation",
          "omega -> -+ i gamma continuation of the oscillator states gives u^+-_n up to a "
          "constant phase, n <= 4",
          continuation, 1e-12);
    c.add("eigen.ho_continuation_phase",
          "that continuation phase is an eighth root of unity", phase_root, 1e-12);
}

// ------------------------------------------------------------- dynamics ----

void run_dynamics(Collector& c) {
    const BarrierParams& params = c.params;
    const double gamma = params.gamma;

    double support = 0.0;
    for (std::size_t n = 0; n <= 3; ++n) {
        for (double t : {0.3 / gamma, 1.7 / gamma}) {
            support = std::max(support,
                               std::abs(dynamics::time_factor(Branch::Plus, n, params, -t)));
            support = std::max(support,
                               std::abs(dynamics::time_factor(Branch::Minus, n, params, t)));
            support = std::max(support,
                               std::abs(dynamics::wavefunction(Branch::Plus, n, params, -t,
                                                               0.5 / params.beta())));
            support = std::max(
                support, std::abs(dynamics::density(Branch::Minus, n, params, t,
                                                    0.5 / params.beta())));
        }
    }
    c.add("dynamics.support", "each branch vanishes identically off its half-line", support,
          0.0);

    double tnorm = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus})
        for (std::size_t n : {std::size_t(0), std::size_t(3)})
            tnorm = std::max(tnorm,
                             std::abs(dynamics::time_norm_quadrature(branch, n, params) - 1.0));
    c.add("dynamics.time_norm", "integral |T^+-_n|^2 dt = 1 in separate mode", tnorm, 1e-8);

    double cnorm = 0.0;
    for (std::size_t n : {std::size_t(0), std::size_t(2)}) {
        const double total =
            dynamics::time_norm_quadrature(Branch::Minus, n, params, TimeMode::Combined) +
            dynamics::time_norm_quadrature(Branch::Plus, n, params, TimeMode::Combined);
        cnorm = std::max(cnorm, std::abs(total - 1.0));
    }
    c.add("dynamics.combined_norm",
          "combined-mode branches carry half the norm each, summing to 1", cnorm, 1e-8);

    // Reciprocity on a 100 x 100 (t, x) sample, both representations.
    double recip_x = 0.0, recip_p = 0.0;
    for (std::size_t n = 0; n <= 3; ++n) {
        double d_x = 0.0, m_x = 0.0, d_p = 0.0, m_p = 0.0;
        for (std::size_t it = 0; it < 100; ++it) {
            const double t = (-3.0 + 6.0 * static_cast<double>(it) / 99.0) / gamma;
            for (std::size_t ix = 0; ix < 100; ++ix) {
                const double x =
                    (-4.0 + 8.0 * static_cast<double>(ix) / 99.0) / params.beta();
                const Complex lhs =
                    std::conj(dynamics::wavefunction(Branch::Plus, n, params, -t, x));
                const Complex rhs = dynamics::wavefunction(Branch::Minus, n, params, t, x);
                d_x = std::max(d_x, std::abs(lhs - rhs));
                m_x = std::max(m_x, std::abs(rhs));
                const double p =
                    (-4.0 + 8.0 * static_cast<double>(ix) / 99.0) / params.beta_tilde();
                const Complex lhs_p =
                    std::conj(dynamics::wavefunction_p(Branch::Plus, n, params, -t, -p));
                const Complex rhs_p = dynamics::wavefunction_p(Branch::Minus, n, params, t, p);
                d_p = std::max(d_p, std::abs(lhs_p - rhs_p));
                m_p = std::max(m_p, std::abs(rhs_p));
            }
        }
        recip_x = std::max(recip_x, d_x / m_x);
        recip_p = std::max(recip_p, d_p / m_p);
    }
    c.add("dynamics.reciprocity_x", "conj(psi^+_n(-t, x)) = psi^-_n(t, x) on a 100x100 sample",
          recip_x, 1e-12);
    c.add("dynamics.reciprocity_p",
          "conj(psi~^+_n(-t, -p)) = psi~^-_n(t, p) on a 100x100 sample", recip_p, 1e-12);

    double cont = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const double t = branch_sign(branch) * 0.5 / gamma;
        for (std::size_t n = 0; n <= 6; ++n)
            cont = std::max(cont, dynamics::continuity_residual(
                                      branch, n, params,
                                      dynamics::default_grid_continuity(params), t,
                                      1e-4 / gamma));
    }
    c.add("dynamics.continuity",
          "d rho/dt + d j/dx = 0 by central differences, n <= 6 (units of gamma rho_max)",
          cont, 1e-4);

    {
        const GridSpec coarse = dynamics::default_grid_continuity(params);
        const GridSpec fine = GridSpec::linspace(coarse.x0, coarse.x_max(), 8001);
        const double rc = dynamics::continuity_residual(Branch::Plus, 2, params, coarse,
                                                        0.5 / gamma, 2e-4 / gamma);
        const double rf = dynamics::continuity_residual(Branch::Plus, 2, params, fine,
                                                        0.5 / gamma, 1e-4 / gamma);
        c.add("dynamics.continuity_order", "continuity residual scales as the stencil order",
              std::abs(std::log2(rc / rf) - 2.0), 0.4);
    }

    double s_diag = 0.0, s_off = 0.0;
    for (std::size_t m = 0; m < 8; ++m) {
        for (std::size_t n = 0; n < 8; ++n) {
            const Complex s = dynamics::transition_matrix(m, n, params);
            if (m == n)
                s_diag = std::max(s_diag, std::abs(s - Complex(1.0)));
            else
                s_off = std::max(s_off, std::abs(s));
        }
    }
    c.add("dynamics.smatrix_diag", "<u^+_n | u^-_n> = 1, n < 8", s_diag, 1e-9);
    c.add("dynamics.smatrix_offdiag", "<u^+_m | u^-_n> = 0 for m != n, n < 8", s_off, 1e-10);

    double lt_analytic = 0.0, lt_quad = 0.0, quantization = 0.0;
    const double spread0 = dynamics::mean_lifetime(Branch::Plus, 0, params).spread;
    for (std::size_t n = 0; n <= 20; ++n) {
        const double lambda = (2.0 * static_cast<double>(n) + 1.0) * gamma;
        for (Branch branch : {Branch::Plus, Branch::Minus}) {
            const auto lt = dynamics::mean_lifetime(branch, n, params);
            lt_analytic = std::max(lt_analytic,
                                   std::abs(lt.mean * lambda - branch_sign(branch)));
            lt_analytic = std::max(lt_analytic, std::abs(lt.spread * lambda - 1.0));
            if (n <= 4) {
                const auto num = dynamics::lifetime_from_quadrature(branch, n, params);
                lt_quad = std::max(lt_quad, std::abs(num.mean - lt.mean) * lambda);
                lt_quad = std::max(lt_quad, std::abs(num.spread - lt.spread) * lambda);
            }
        }
        const double ratio = (2.0 * static_cast<double>(n) + 1.0) *
                             dynamics::mean_lifetime(Branch::Plus, n, params).spread;
        quantization = std::max(quantization, std::abs(ratio / spread0 - 1.0));
    }
    c.add("dynamics.lifetime_analytic",
          "mean and spread of |T^+-_n|^2 are +-1/lambda_n and 1/lambda_n", lt_analytic, 1e-12);
    c.add("dynamics.lifetime_quadrature",
          "Simpson time moments reproduce the analytic lifetimes, n <= 4", lt_quad, 1e-8);
    c.add("dynamics.lifetime_quantization",
          "(2n+1) spread_n is the n-independent constant 1/gamma, n <= 20", quantization,
          1e-12);

    double balance = 0.0;
    for (std::size_t n = 0; n <= 6; ++n)
        balance = std::max(balance, dynamics::growth_decay_balance(
                                        n, params, dynamics::default_grid_continuity(params)));
    c.add("dynamics.balance",
          "grown mass on t<0 equals decayed mass on t>0 pointwise, n <= 6", balance, 1e-10);

    double positivity = 0.0, j_parity = 0.0;
    for (std::size_t n = 0; n <= 6; ++n) {
        double j_max = 0.0, j_diff = 0.0;
        for (std::size_t i = 0; i <= 40; ++i) {
            const double x = (-4.0 + 0.2 * static_cast<double>(i)) / params.beta();
            const double t = 0.4 / gamma;
            const double rho = dynamics::density(Branch::Plus, n, params, t, x);
            positivity = std::max(positivity, -std::min(rho, 0.0));
            const double j = dynamics::current(Branch::Plus, n, params, t, x);
            j_max = std::max(j_max, std::abs(j));
            j_diff = std::max(j_diff,
                              std::abs(dynamics::current(Branch::Plus, n, params, t, -x) + j));
        }
        j_parity = std::max(j_parity, j_diff / j_max);
    }
    c.add("dynamics.density_positivity", "densities are nonnegative", positivity, 0.0);
    c.add("dynamics.current_parity", "j(t, -x) = -j(t, x), n <= 6", j_parity, 1e-12);
}

// -------------------------------------------------------------- spectra ----

void run_spectra(Collector& c) {
    const BarrierParams& params = c.params;

    double pole_side = 0.0, pole_match = 0.0;
    for (std::size_t n = 0; n <= 6; ++n) {
        const Complex pp = spectra::amplitude_pole(Branch::Plus, n, params);
        const Complex pm = spectra::amplitude_pole(Branch::Minus, n, params);
        if (!(pp.imag() < 0.0)) pole_side = 1.0;
        if (!(pm.imag() > 0.0)) pole_side = 1.0;
        pole_match = std::max(pole_match,
                              std::abs(pp - eigen::eigenvalue(Branch::Plus, n, params)));
        pole_match = std::max(pole_match,
                              std::abs(pm - eigen::eigenvalue(Branch::Minus, n, params)));
    }
    c.add("spectra.pole_side",
          "decaying amplitudes have lower-half-plane poles, growing upper", pole_side, 0.0);
    c.add("spectra.pole_matches_eigenvalue", "amplitude poles sit at the eigenvalues E^+-_n",
          pole_match, 0.0);

    double conj_id = 0.0, peak = 0.0, bw_sq = 0.0, comb_sq = 0.0, real_sum = 0.0;
    for (std::size_t n : {std::size_t(0), std::size_t(2)}) {
        const double gamma_n = spectra::half_width(n, params);
        double sum_max = 0.0, im_max = 0.0;
        for (std::size_t i = 0; i <= 40; ++i) {
            const double E = params.V0 + gamma_n * (-10.0 + 0.5 * static_cast<double>(i));
            const Complex tp = spectra::energy_amplitude(Branch::Plus, n, params, E);
            const Complex tm = spectra::energy_amplitude(Branch::Minus, n, params, E);
            conj_id = std::max(conj_id, std::abs(std::conj(tm) - tp) / std::abs(tp));
            bw_sq = std::max(bw_sq, std::abs(std::norm(tp) -
                                             spectra::breit_wigner(n, params, E)) *
                                        kPi * gamma_n);
            const Complex sum = spectra::amplitude_sum(n, params, E);
            comb_sq = std::max(comb_sq, std::abs(std::norm(sum) -
                                                 spectra::combined_line_shape(n, params, E)) *
                                            kPi * gamma_n / 2.0);
            sum_max = std::max(sum_max, std::abs(sum));
            im_max = std::max(im_max, std::abs(sum.imag()));
        }
        real_sum = std::max(real_sum, im_max / sum_max);
        peak = std::max(peak, std::abs(std::norm(spectra::energy_amplitude(
                                           Branch::Plus, n, params, params.V0)) *
                                           kPi * gamma_n -
                                       1.0));
    }
    c.add("spectra.amplitude_conjugation", "conj(T~^-_n(E)) = T~^+_n(E) for real E", conj_id,
          1e-14);
    c.add("spectra.amplitude_peak", "|T~(V0)|^2 = 1 / (pi Gamma_n)", peak, 1e-13);
    c.add("spectra.bw_equals_amplitude_sq",
          "|T~^+-|^2 reproduces the Breit-Wigner profile (units of its peak)", bw_sq, 1e-13);
    c.add("spectra.combined_equals_sum_sq",
          "|T~^- + T~^+|^2 in combined mode reproduces the squared line shape", comb_sq,
          1e-13);
    c.add("spectra.sum_real", "T~^-(E) + T~^+(E) is real on the real axis", real_sum, 1e-12);

    double bw_peak = 0.0, bw_half = 0.0, ratio = 0.0, quarter = 0.0;
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(5)}) {
        const double gamma_n = spectra::half_width(n, params);
        const double peak_bw = spectra::breit_wigner(n, params, params.V0);
        bw_peak = std::max(bw_peak, std::abs(peak_bw * kPi * gamma_n - 1.0));
        for (double s : {-1.0, 1.0}) {
            bw_half = std::max(bw_half,
                               std::abs(spectra::breit_wigner(n, params,
                                                              params.V0 + s * gamma_n) /
                                            peak_bw -
                                        0.5));
            quarter = std::max(
                quarter, std::abs(spectra::combined_line_shape(n, params,
                                                               params.V0 + s * gamma_n) /
                                      spectra::combined_line_shape(n, params, params.V0) -
                                  0.25));
        }
        ratio = std::max(ratio, std::abs(spectra::combined_line_shape(n, params, params.V0) /
                                             peak_bw -
                                         2.0));
    }
    c.add("spectra.bw_peak", "Breit-Wigner peak is 1 / (pi Gamma_n)", bw_peak, 1e-13);
    c.add("spectra.bw_half_height", "Breit-Wigner halves at E = V0 +- Gamma_n", bw_half,
          1e-13);
    c.add("spectra.combined_peak_ratio", "combined peak is twice the Breit-Wigner peak",
          ratio, 1e-12);
    c.add("spectra.combined_quarter_width",
          "combined shape falls to quarter peak at E = V0 +- Gamma_n", quarter, 1e-12);

    {
        const auto shape = spectra::sample_line_shape(1, params, TimeMode::Separate);
        const double fwhm = spectra::measured_fwhm(shape);
        c.add("spectra.bw_fwhm",
              "sampled FWHM equals 2 Gamma_n (units of one grid step)",
              std::abs(fwhm - 2.0 * shape.gamma_n) / shape.grid.dx, 1.0);
        double min_value = 0.0;
        for (double v : shape.values) min_value = std::min(min_value, v);
        c.add("spectra.shape_nonnegative", "line-shape samples are nonnegative", -min_value,
              0.0);
    }

    c.add("spectra.bw_mass",
          "Breit-Wigner normalizes to 1 on the adaptively extended window",
          std::abs(spectra::normalization_mass(0, params, TimeMode::Separate) - 1.0), 1e-3);
    c.add("spectra.combined_mass",
          "combined shape normalizes to 1 on the adaptively extended window",
          std::abs(spectra::normalization_mass(0, params, TimeMode::Combined) - 1.0), 1e-3);
    {
        const auto shape = spectra::sample_line_shape(0, params, TimeMode::Combined, 50.0, 4097);
        double acc = 0.5 * (shape.values.front() + shape.values.back());
        for (std::size_t i = 1; i + 1 < shape.values.size(); ++i) acc += shape.values[i];
        c.add("spectra.combined_mass_50",
              "combined trapezoid over +-50 Gamma_n alone is within 1e-3 of 1",
              std::abs(acc * shape.grid.dx - 1.0), 1e-3);
    }

    double uncertainty = 0.0;
    for (std::size_t n = 0; n <= 20; ++n)
        uncertainty = std::max(uncertainty,
                               std::abs(spectra::uncertainty_product(n, params) /
                                            (0.5 * params.hbar) -
                                        1.0));
    c.add("spectra.uncertainty", "spread(t) * Gamma_n = hbar / 2, n <= 20", uncertainty,
          1e-12);

    double plancherel = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const double tn = dynamics::time_norm_quadrature(branch, 1, params);
        const double en = spectra::energy_norm_quadrature(branch, 1, params);
        plancherel = std::max(plancherel, std::abs(tn - en));
    }
    c.add("spectra.plancherel", "time-domain and energy-domain norms of T_n agree", plancherel,
          1e-6);

    c.add("spectra.dft.plus",
          "trapezoidal e^{+iEt/hbar} transform of T^+_0 matches the closed form",
          spectra::dft_cross_check(Branch::Plus, 0, params, 40.0 / params.gamma, 1u << 16),
          1e-3);
    c.add("spectra.dft.minus",
          "trapezoidal e^{+iEt/hbar} transform of T^-_1 matches the closed form",
          spectra::dft_cross_check(Branch::Minus, 1, params, 40.0 / (3.0 * params.gamma),
                                   1u << 16),
          1e-3);
}

} // namespace

std::size_t Report::passed() const {
    std::size_t count = 0;
    for (const auto& e : entries)
        if (e.pass) ++count;
    return count;
}

std::size_t Report::failed() const { return entries.size() - passed(); }

double Options::scale_for(const std::string& name) const {
    double scale = 1.0;
    auto all = tolerance_scale.find("");
    if (all != tolerance_scale.end()) scale *= all->second;
    auto it = tolerance_scale.find(name);
    if (it != tolerance_scale.end()) scale *= it->second;
    return scale;
}

unsigned parse_suite(const std::string& name) {
    if (name == "polys") return kPolys;
    if (name == "quad") return kQuad;
    if (name == "eigen") return kEigen;
    if (name == "dynamics") return kDynamics;
    if (name == "spectra") return kSpectra;
    if (name == "all") return kAll;
    throw std::invalid_argument("unknown suite: " + name);
}

Report emit_verification(const BarrierParams& params, unsigned suites,
                         const Options& options) {
    params.validate();
    Report report;
    report.params = params;
    Collector c{params, options, report.entries};
    if (suites & kPolys) run_polys(c);
    if (suites & kQuad) run_quad(c);
    if (suites & kEigen) run_eigen(c);
    if (suites & kDynamics) run_dynamics(c);
    if (suites & kSpectra) run_spectra(c);
    return report;
}

std::string to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["params"] = {{"m", report.params.m},
                   {"gamma", report.params.gamma},
                   {"V0", report.params.V0},
                   {"hbar", report.params.hbar}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        checks.push_back({{"name", e.name},
                          {"detail", e.detail},
                          {"residual", e.residual},
                          {"tolerance", e.tolerance},
                          {"pass", e.pass}});
    }
    j["checks"] = checks;
    j["summary"] = {{"total", report.entries.size()},
                    {"passed", report.passed()},
                    {"failed", report.failed()}};
    return j.dump(2) + "\n";
}

std::string to_text(const Report& report) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(3);
    for (const auto& e : report.entries) {
        out << (e.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(36) << e.name
            << " residual " << e.residual << "  tol " << e.tolerance << "\n";
    }
    out << report.passed() << "/" << report.entries.size() << " checks passed\n";
    return out.str();
}

} // namespace verify
} // namespace ppb
