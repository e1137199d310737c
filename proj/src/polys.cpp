#include "ppb/polys.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "ppb/errors.hpp"

namespace ppb {
namespace polys {

namespace {

void check_cap(std::size_t n) {
    if (n > kDegreeCap)
        throw capacity_error("polynomial degree " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kDegreeCap));
}

// Series recurrence for H^+-_n: with the eigen-parameter fixed to the
// terminating value, coefficients of xi^j and xi^{j+2} are related by
//   b_{j+2} (j+2)(j+1) = +- 2i (n - j) b_j.
// Solved downward from b_n = 2^n. The true b_j are Gaussian integers, so
// multiplying before dividing keeps every IEEE step exact while the
// intermediates stay below 2^53 (n <= 20); pure-real/pure-imaginary zeros
// are preserved bit-exactly by the multiply-by-(-+i) form.
ComplexPolynomial build_coeffs(Branch branch, std::size_t n) {
    std::vector<Complex> b(n + 1, Complex(0.0));
    b[n] = std::ldexp(1.0, static_cast<int>(n)); // 2^n
    const Complex step_phase =
        branch == Branch::Plus ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
    for (std::size_t j = n; j >= 2; j -= 2) {
        const double num = static_cast<double>(j * (j - 1));
        const double den = 2.0 * static_cast<double>(n - j + 2);
        b[j - 2] = step_phase * (b[j] * num / den);
    }
    return ComplexPolynomial(std::move(b));
}

struct CoeffCache {
    std::mutex mutex;
    std::array<std::optional<ComplexPolynomial>, kDegreeCap + 1> plus;
    std::array<std::optional<ComplexPolynomial>, kDegreeCap + 1> minus;
};

CoeffCache& cache() {
    static CoeffCache c;
    return c;
}

// Real Hermite tables from H_{n+1} = 2x H_n - 2n H_{n-1}.
struct HermiteCache {
    std::mutex mutex;
    std::array<std::optional<ComplexPolynomial>, kDegreeCap + 1> table;
};

HermiteCache& hermite_cache() {
    static HermiteCache c;
    return c;
}

} // namespace

const ComplexPolynomial& hermite_like_coeffs(Branch branch, std::size_t n) {
    check_cap(n);
    CoeffCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    auto& slot = (branch == Branch::Plus ? c.plus : c.minus)[n];
    if (!slot) slot = build_coeffs(branch, n);
    return *slot;
}

Complex hermite_like_eval(Branch branch, std::size_t n, Complex z) {
    check_cap(n);
    // H_{n+1} = 2 z H_n -+ 2 i n H_{n-1}
    const Complex two_i_sign(0.0, branch == Branch::Plus ? 2.0 : -2.0);
    Complex hm1(0.0), h(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex next = 2.0 * z * h - two_i_sign * static_cast<double>(k) * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

Complex hermite_like_derivative(Branch branch, std::size_t n, Complex z) {
    check_cap(n);
    if (n == 0) return Complex(0.0);
    return 2.0 * static_cast<double>(n) * hermite_like_eval(branch, n - 1, z);
}

double generating_function_residual(Branch branch, Complex z, Complex s,
                                    std::size_t n_max) {
    check_cap(n_max);
    const Complex mi_sign(0.0, branch == Branch::Plus ? -1.0 : 1.0); // -+ i
    const Complex lhs = std::exp(mi_sign * (2.0 * s * z - s * s));
    Complex sum(0.0);
    Complex term_scale(1.0); // (-+ i s)^n / n!
    for (std::size_t n = 0; n <= n_max; ++n) {
        sum += hermite_like_eval(branch, n, z) * term_scale;
        term_scale *= mi_sign * s / static_cast<double>(n + 1);
    }
    return std::abs(lhs - sum);
}

ComplexPolynomial ode_residual(Branch branch, std::size_t n) {
    const ComplexPolynomial& h = hermite_like_coeffs(branch, n);
    const double sign = branch_sign(branch);
    const Complex two_i(0.0, 2.0 * sign);
    // H'' +- 2 i xi H' -+ 2 i n H
    ComplexPolynomial r = h.derivative().derivative();
    r += two_i * h.derivative().shifted_up(1);
    r -= two_i * static_cast<double>(n) * h;
    return r;
}

double hermite_eval(std::size_t n, double x) {
    check_cap(n);
    double hm1 = 0.0, h = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double next = 2.0 * x * h - 2.0 * static_cast<double>(k) * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

const ComplexPolynomial& hermite_coeffs(std::size_t n) {
    check_cap(n);
    HermiteCache& c = hermite_cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    auto& slot = c.table[n];
    if (!slot) {
        ComplexPolynomial hm1 = ComplexPolynomial::constant(Complex(1.0));
        if (n == 0) {
            slot = hm1;
            return *slot;
        }
        ComplexPolynomial h = ComplexPolynomial::monomial(1, Complex(2.0));
        for (std::size_t k = 1; k < n; ++k) {
            ComplexPolynomial next =
                h.shifted_up(1) * Complex(2.0) - hm1 * Complex(2.0 * static_cast<double>(k));
            hm1 = h;
            h = next;
        }
        slot = h;
    }
    return *slot;
}

} // namespace polys
} // namespace ppb
