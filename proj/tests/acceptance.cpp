// Acceptance gate: fifteen end-to-end criteria covering the full analytic
// solution. Each prints one PASS/FAIL line with its measured figure; the
// process exits nonzero if any criterion fails. Criteria run in natural units
// (m = gamma = hbar = 1, V0 = 0) unless stated otherwise.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ppb/dynamics.hpp"
#include "ppb/eigen.hpp"
#include "ppb/polys.hpp"
#include "ppb/quad.hpp"
#include "ppb/spectra.hpp"
#include "ppb/verify.hpp"

using ppb::BarrierParams;
using ppb::Branch;
using ppb::Complex;
using ppb::GridSpec;
using ppb::TimeMode;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, double figure,
            const std::string& requirement) {
    std::printf("%s  %02d %-28s %11.3e  (need %s)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), figure, requirement.c_str());
    if (!pass) ++g_failures;
}

// 1. Coefficient tables for n <= 4 match the closed forms exactly.
void criterion_polynomial_table() {
    static const std::vector<std::vector<Complex>> plus = {
        {{1, 0}},
        {{0, 0}, {2, 0}},
        {{0, -2}, {0, 0}, {4, 0}},
        {{0, 0}, {0, -12}, {0, 0}, {8, 0}},
        {{-12, 0}, {0, 0}, {0, -48}, {0, 0}, {16, 0}},
    };
    double worst = 0.0;
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto& hp = ppb::polys::hermite_like_coeffs(Branch::Plus, n);
        const auto& hm = ppb::polys::hermite_like_coeffs(Branch::Minus, n);
        for (std::size_t k = 0; k <= n; ++k) {
            worst = std::max(worst, std::abs(hp.coeff(k) - plus[n][k]));
            worst = std::max(worst, std::abs(hm.coeff(k) - std::conj(plus[n][k])));
        }
    }
    report(1, "polynomial_table", worst <= 1e-14, worst, "<= 1e-14");
}

// 2. Differential-equation residual below 1e-10 * 2^n through n = 20.
void criterion_ode_identity() {
    double worst = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus})
        for (std::size_t n = 0; n <= 20; ++n)
            worst = std::max(worst, ppb::polys::ode_residual(branch, n).max_abs_coeff() /
                                        std::ldexp(1.0, static_cast<int>(n)));
    report(2, "ode_identity", worst < 1e-10, worst, "< 1e-10 * 2^n");
}

// 3. 8x8 pairing block: diagonal (+-2i)^n n! sqrt(+-i pi) to 1e-9 relative,
//    off-diagonals below 1e-10 in diagonal-normalized units.
void criterion_orthogonality() {
    double diag_worst = 0.0, off_worst = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        std::vector<double> root_diag(8);
        for (std::size_t n = 0; n < 8; ++n)
            root_diag[n] =
                std::sqrt(std::abs(ppb::quad::orthogonality_diagonal(n, branch)));
        for (std::size_t m = 0; m < 8; ++m) {
            for (std::size_t n = 0; n < 8; ++n) {
                const Complex got = ppb::quad::fresnel_orthogonality(m, n, branch);
                if (m == n) {
                    const Complex want = ppb::quad::orthogonality_diagonal(n, branch);
                    diag_worst = std::max(diag_worst,
                                          std::abs(got - want) / std::abs(want));
                } else {
                    off_worst = std::max(off_worst,
                                         std::abs(got) / (root_diag[m] * root_diag[n]));
                }
            }
        }
    }
    report(3, "orthogonality", diag_worst < 1e-9 && off_worst < 1e-10,
           std::max(diag_worst, off_worst), "diag < 1e-9, offdiag < 1e-10");
}

// 4. Eigenvalue ladder exact; conjugate pairing bit-exact.
void criterion_eigenvalue_ladder() {
    const BarrierParams p{}; // natural units: products below are exact
    double worst = 0.0;
    for (std::size_t n = 0; n <= 20; ++n) {
        const Complex ep = ppb::eigen::eigenvalue(Branch::Plus, n, p);
        const Complex em = ppb::eigen::eigenvalue(Branch::Minus, n, p);
        worst = std::max(worst, std::abs(ep - std::conj(em)));
        worst = std::max(worst, std::abs(ep.real() - p.V0));
        worst = std::max(worst,
                         std::abs(ep.imag() + (static_cast<double>(n) + 0.5)));
    }
    report(4, "eigenvalue_ladder", worst == 0.0, worst, "bit-exact");
}

// 5. Hamiltonian residual < 1e-4 at dx = 1e-3 on [-4, 4] for n <= 6, with
//    second-order convergence under step halving.
void criterion_hamiltonian_residual() {
    const BarrierParams p{};
    const GridSpec grid = GridSpec::linspace(-4.0, 4.0, 8001); // dx = 1e-3
    double worst = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        for (std::size_t n = 0; n <= 6; ++n) {
            worst = std::max(worst, ppb::eigen::hamiltonian_residual_x(branch, n, p, grid));
            worst = std::max(worst, ppb::eigen::hamiltonian_residual_p(
                                        branch, n, p, GridSpec::linspace(-4.0, 4.0, 8001)));
        }
    }
    const double coarse = ppb::eigen::hamiltonian_residual_x(
        Branch::Plus, 4, p, GridSpec::linspace(-4.0, 4.0, 4001));
    const double fine = ppb::eigen::hamiltonian_residual_x(Branch::Plus, 4, p, grid);
    const double order = std::log2(coarse / fine);
    const bool pass = worst < 1e-4 && std::abs(order - 2.0) <= 0.2;
    report(5, "hamiltonian_residual", pass, worst, "< 1e-4, order 2.0 +- 0.2");
}

// 6. Regularized Fourier transform of u_n reproduces u~_n, phase included.
void criterion_fourier_duality() {
    const BarrierParams p{};
    double worst = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus})
        for (std::size_t n = 0; n <= 6; ++n)
            worst = std::max(worst, ppb::eigen::fourier_map_residual(branch, n, p));
    report(6, "fourier_duality", worst < 1e-6, worst, "< 1e-6");
}

// 7. Continuity equation residual < 1e-4 for n <= 6, second-order convergent.
void criterion_continuity() {
    const BarrierParams p{};
    const auto grid = ppb::dynamics::default_grid_continuity(p);
    double worst = 0.0;
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const double t = ppb::branch_sign(branch) * 0.5;
        for (std::size_t n = 0; n <= 6; ++n)
            worst = std::max(
                worst, ppb::dynamics::continuity_residual(branch, n, p, grid, t, 1e-4));
    }
    const double rc = ppb::dynamics::continuity_residual(Branch::Plus, 3, p, grid, 0.5, 2e-4);
    const double rf = ppb::dynamics::continuity_residual(
        Branch::Plus, 3, p, GridSpec::linspace(grid.x0, grid.x_max(), 8001), 0.5, 1e-4);
    const double order = std::log2(rc / rf);
    const bool pass = worst < 1e-4 && std::abs(order - 2.0) <= 0.4;
    report(7, "continuity", pass, worst, "< 1e-4, second order");
}

// 8. Transition matrix equals the identity on the 8x8 block.
void criterion_transition_matrix() {
    const BarrierParams p{};
    double worst = 0.0;
    for (std::size_t m = 0; m < 8; ++m)
        for (std::size_t n = 0; n < 8; ++n)
            worst = std::max(worst, std::abs(ppb::dynamics::transition_matrix(m, n, p) -
                                             (m == n ? Complex(1.0) : Complex(0.0))));
    report(8, "transition_matrix", worst < 1e-9, worst, "< 1e-9");
}

// 9. Lifetimes: quadrature matches the analytic moments to 1e-8; the
//    quantization law (2n+1) spread_n = const holds to 1e-12.
void criterion_lifetimes() {
    const BarrierParams p{};
    double worst_quad = 0.0, worst_law = 0.0;
    const double base = ppb::dynamics::mean_lifetime(Branch::Plus, 0, p).spread;
    for (std::size_t n = 0; n <= 20; ++n) {
        const double lambda = (2.0 * static_cast<double>(n) + 1.0) * p.gamma;
        worst_law = std::max(
            worst_law,
            std::abs(lambda * ppb::dynamics::mean_lifetime(Branch::Plus, n, p).spread -
                     base));
        if (n <= 4) {
            for (Branch branch : {Branch::Plus, Branch::Minus}) {
                const auto a = ppb::dynamics::mean_lifetime(branch, n, p);
                const auto q = ppb::dynamics::lifetime_from_quadrature(branch, n, p);
                worst_quad = std::max(worst_quad, std::abs(a.mean - q.mean) * lambda);
                worst_quad = std::max(worst_quad, std::abs(a.spread - q.spread) * lambda);
            }
        }
    }
    const bool pass = worst_quad < 1e-8 && worst_law < 1e-12;
    report(9, "lifetimes", pass, std::max(worst_quad, worst_law),
           "quad < 1e-8, law < 1e-12");
}

// 10. Line shape: sampled FWHM within one grid step of 2 Gamma_n; adaptive
//     window mass within 1e-3 of 1; trapezoidal transform cross-check < 1e-3
//     at window 40/((2n+1) gamma) with 2^16 samples.
void criterion_breit_wigner() {
    const BarrierParams p{};
    double fwhm_worst = 0.0, mass_worst = 0.0, dft_worst = 0.0;
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(3)}) {
        const auto shape = ppb::spectra::sample_line_shape(n, p, TimeMode::Separate);
        fwhm_worst = std::max(fwhm_worst,
                              std::abs(ppb::spectra::measured_fwhm(shape) -
                                       2.0 * shape.gamma_n) /
                                  shape.grid.dx);
        mass_worst = std::max(
            mass_worst,
            std::abs(ppb::spectra::normalization_mass(n, p, TimeMode::Separate) - 1.0));
        const double lambda = (2.0 * static_cast<double>(n) + 1.0) * p.gamma;
        for (Branch branch : {Branch::Plus, Branch::Minus})
            dft_worst = std::max(dft_worst, ppb::spectra::dft_cross_check(
                                                branch, n, p, 40.0 / lambda, 1u << 16));
    }
    const bool pass = fwhm_worst <= 1.0 && mass_worst < 1e-3 && dft_worst < 1e-3;
    report(10, "breit_wigner", pass, std::max({fwhm_worst * 1e-3, mass_worst, dft_worst}),
           "fwhm within 1 step, mass & transform < 1e-3");
}

// 11. Uncertainty product hbar/2 to 1e-12 for n <= 20 at three unit settings.
void criterion_uncertainty() {
    double worst = 0.0;
    for (const BarrierParams p :
         {BarrierParams{}, BarrierParams{1.0, 5.0, 0.0, 0.2}, BarrierParams{1.0, 0.1, 2.0, 7.0}}) {
        for (std::size_t n = 0; n <= 20; ++n)
            worst = std::max(worst, std::abs(ppb::spectra::uncertainty_product(n, p) /
                                                 (0.5 * p.hbar) -
                                             1.0));
    }
    report(11, "uncertainty_product", worst < 1e-12, worst, "< 1e-12 of hbar/2");
}

// 12. Combined line: peak twice the single-branch peak, quarter-height at one
//     half-width, real amplitude sum, unit mass.
void criterion_combined_line() {
    const BarrierParams p{};
    double worst = 0.0, mass_worst = 0.0;
    for (std::size_t n : {std::size_t(0), std::size_t(2)}) {
        const double gn = ppb::spectra::half_width(n, p);
        const double peak = ppb::spectra::combined_line_shape(n, p, p.V0);
        worst = std::max(worst,
                         std::abs(peak / (2.0 * ppb::spectra::breit_wigner(n, p, p.V0)) - 1.0));
        worst = std::max(worst, std::abs(ppb::spectra::combined_line_shape(n, p, p.V0 + gn) /
                                             (0.25 * peak) -
                                         1.0));
        for (double s : {-6.4, -0.7, 0.3, 4.9}) {
            const Complex sum = ppb::spectra::amplitude_sum(n, p, p.V0 + s * gn);
            worst = std::max(worst, std::abs(sum.imag()) / std::abs(sum));
        }
        mass_worst = std::max(
            mass_worst,
            std::abs(ppb::spectra::normalization_mass(n, p, TimeMode::Combined) - 1.0));
    }
    const bool pass = worst < 1e-12 && mass_worst < 1e-3;
    report(12, "combined_line", pass, std::max(worst, mass_worst),
           "ratios < 1e-12, mass < 1e-3");
}

// 13. Reciprocity over a 100x100 (t, x) sample, both representations.
void criterion_reciprocity() {
    const BarrierParams p{};
    double worst = 0.0;
    for (std::size_t n = 0; n <= 2; ++n) {
        double dx = 0.0, mx = 0.0, dp = 0.0, mp = 0.0;
        for (std::size_t it = 0; it < 100; ++it) {
            const double t = -3.0 + 6.0 * static_cast<double>(it) / 99.0;
            for (std::size_t ix = 0; ix < 100; ++ix) {
                const double x = -4.0 + 8.0 * static_cast<double>(ix) / 99.0;
                const Complex lhs =
                    std::conj(ppb::dynamics::wavefunction(Branch::Plus, n, p, -t, x));
                const Complex rhs = ppb::dynamics::wavefunction(Branch::Minus, n, p, t, x);
                dx = std::max(dx, std::abs(lhs - rhs));
                mx = std::max(mx, std::abs(rhs));
                const Complex lhs_p =
                    std::conj(ppb::dynamics::wavefunction_p(Branch::Plus, n, p, -t, -x));
                const Complex rhs_p = ppb::dynamics::wavefunction_p(Branch::Minus, n, p, t, x);
                dp = std::max(dp, std::abs(lhs_p - rhs_p));
                mp = std::max(mp, std::abs(rhs_p));
            }
        }
        worst = std::max({worst, dx / mx, dp / mp});
    }
    report(13, "reciprocity", worst < 1e-12, worst, "< 1e-12");
}

// 14. Harmonic-oscillator baseline: exact ladder, identity Gram block.
void criterion_oscillator_baseline() {
    const ppb::OscillatorParams ho{1.0, 1.0, 0.0, 1.0};
    double gram_worst = 0.0, ladder_worst = 0.0;
    for (std::size_t n = 0; n <= 6; ++n) {
        ladder_worst = std::max(ladder_worst,
                                std::abs(ppb::eigen::ho_eigenpair(n, ho).energy -
                                         (static_cast<double>(n) + 0.5)));
        for (std::size_t m = 0; m <= 6; ++m)
            gram_worst = std::max(gram_worst, std::abs(ppb::eigen::ho_overlap(m, n, ho) -
                                                       (m == n ? 1.0 : 0.0)));
    }
    const bool pass = ladder_worst == 0.0 && gram_worst < 1e-10;
    report(14, "oscillator_baseline", pass, std::max(ladder_worst, gram_worst),
           "ladder exact, Gram < 1e-10");
}

// 15. End-to-end: the CLI's full verification run exits 0 and its JSON report
//     is byte-identical across two invocations.
void criterion_end_to_end() {
    const std::string exe = PPB_CLI_PATH;
    auto run_once = [&](const std::string& path) {
        const std::string cmd =
            exe + " verify --suite all --format json --out " + path + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const int c1 = run_once("acceptance_report_1.json");
    const int c2 = run_once("acceptance_report_2.json");
    const std::string r1 = slurp("acceptance_report_1.json");
    const std::string r2 = slurp("acceptance_report_2.json");
    std::remove("acceptance_report_1.json");
    std::remove("acceptance_report_2.json");
    const bool pass = c1 == 0 && c2 == 0 && !r1.empty() && r1 == r2;
    report(15, "end_to_end_cli", pass, pass ? 0.0 : 1.0, "exit 0, byte-stable JSON");
}

} // namespace

int main() {
    criterion_polynomial_table();
    criterion_ode_identity();
    criterion_orthogonality();
    criterion_eigenvalue_ladder();
    criterion_hamiltonian_residual();
    criterion_fourier_duality();
    criterion_continuity();
    criterion_transition_matrix();
    criterion_lifetimes();
    criterion_breit_wigner();
    criterion_uncertainty();
    criterion_combined_line();
    criterion_reciprocity();
    criterion_oscillator_baseline();
    criterion_end_to_end();
    if (g_failures == 0) {
        std::printf("acceptance: all 15 criteria passed\n");
        return EXIT_SUCCESS;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return EXIT_FAILURE;
}
