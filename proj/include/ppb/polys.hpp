#pragma once

#include <complex>
#include <cstddef>

#include "ppb/polynomial.hpp"

namespace ppb {

// Sign branch of the complex-Hermite family H^+-_n. Plus carries weight
// e^{+i xi^2} and decaying time factors; Minus is its complex conjugate
// partner on the real axis.
enum class Branch { Plus, Minus };

constexpr Branch opposite(Branch b) {
    return b == Branch::Plus ? Branch::Minus : Branch::Plus;
}
// +1 for Plus, -1 for Minus: the sign s in H_{n+1} = 2 xi H_n - s 2in H_{n-1},
// weight e^{s i xi^2}, eigenvalue imaginary part -s (n+1/2) hbar gamma.
constexpr double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

namespace polys {

// Coefficient tables above this degree overflow the exact-integer range of
// doubles badly enough to be useless; refuse rather than degrade.
inline constexpr std::size_t kDegreeCap = 30;

// Coefficients of H^+-_n: degree n, leading coefficient exactly 2^n,
// alternating pure-real / pure-imaginary entries, H^-_n = conj(H^+_n).
// Built from the three-term series recurrence; solved from the termination
// end so every coefficient is an exact Gaussian integer for n <= 20.
// Throws capacity_error for n > kDegreeCap. Thread-safe (memoized).
const ComplexPolynomial& hermite_like_coeffs(Branch branch, std::size_t n);

// H^+-_n(z) by the upward recurrence H_{n+1} = 2 z H_n -+ 2 i n H_{n-1}.
Complex hermite_like_eval(Branch branch, std::size_t n, Complex z);

// d/dz H^+-_n(z) = 2 n H^+-_{n-1}(z).
Complex hermite_like_derivative(Branch branch, std::size_t n, Complex z);

// | e^{-+ i (2 s z - s^2)} - sum_{n<=n_max} H^+-_n(z) (-+ i s)^n / n! |.
double generating_function_residual(Branch branch, Complex z, Complex s,
                                    std::size_t n_max);

// Residual polynomial of the defining ODE, H'' +- 2 i xi H' -+ 2 i n H,
// computed coefficient-wise. Identically zero for exact coefficients.
ComplexPolynomial ode_residual(Branch branch, std::size_t n);

// Real (physicists') Hermite polynomial H_n(x).
double hermite_eval(std::size_t n, double x);

// Integer coefficient table of the real Hermite polynomial H_n.
const ComplexPolynomial& hermite_coeffs(std::size_t n);

} // namespace polys
} // namespace ppb
