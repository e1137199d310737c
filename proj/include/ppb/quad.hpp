#pragma once

#include <complex>
#include <vector>

#include "ppb/polynomial.hpp"
#include "ppb/polys.hpp"

namespace ppb {

// Integrand factor e^{a x^2 / 2}. Convergent for Re(a) < 0; the pure-Fresnel
// boundary Re(a) = 0, Im(a) != 0 is reached as a distributional limit.
struct GaussianExponent {
    Complex a;
    bool damped() const { return a.real() < 0.0; }
    bool fresnel() const { return a.real() == 0.0 && a.imag() != 0.0; }
};

// Result of an extrapolated limit: value plus an a-posteriori error estimate
// (magnitude of the last extrapolation correction).
struct RegularizedValue {
    Complex value;
    double error_estimate;
};

namespace quad {

// Default damping schedule for Fresnel-limit extrapolation.
inline const std::vector<double> kDefaultEpsSchedule = {1e-1, 5e-2, 2.5e-2, 1.25e-2};

// integral over R of p(x) e^{a x^2 / 2} dx, in closed form via the moment
// table M_{2j}(a) = (2j-1)!! sqrt(2 pi) (-a)^{-(2j+1)/2} (principal branch).
// Odd moments vanish identically and are skipped (bit-exact zeros).
// Requires Re(a) < 0, or Re(a) = 0 with Im(a) != 0; throws std::domain_error
// otherwise (the integral diverges).
Complex moment_integral(const ComplexPolynomial& p, Complex a);

// integral over R of p(x) e^{a x^2 / 2 + b x} dx, by completing the square:
// equals e^{-b^2/(2a)} * moment_integral(p(. - b/a), a). Same domain as above.
Complex moment_integral_linear(const ComplexPolynomial& p, Complex a, Complex b);

// Polynomial (Neville) extrapolation of values(eps) to eps -> 0+. The
// schedule must be positive and strictly decreasing with >= 2 entries.
// Throws numerical_error if the tableau produces non-finite values or the
// final correction grows instead of contracting.
RegularizedValue extrapolate_to_zero(const std::vector<double>& eps,
                                     const std::vector<Complex>& values);

// Fresnel limit lim_{eps->0+} integral p(x) e^{(i a_imag - eps) x^2 / 2} dx,
// Richardson-extrapolated over eps_schedule. a_imag must be nonzero.
RegularizedValue regularized_pairing(const ComplexPolynomial& p, double a_imag,
                                     const std::vector<double>& eps_schedule = kDefaultEpsSchedule);

// Pairing integral of the complex-Hermite family,
//   integral conj(H^-+_m(xi)) H^+-_n(xi) e^{+- i xi^2} dxi,
// with the conjugate rewritten through conj(H^-+_m) = H^+-_m on the real
// axis. Equals (+-2i)^n n! sqrt(+- i pi) delta_{mn}; odd m+n is bit-exact 0.
Complex fresnel_orthogonality(std::size_t m, std::size_t n, Branch branch);

// Expected diagonal value (+-2i)^n n! sqrt(+- i pi) of the pairing above.
Complex orthogonality_diagonal(std::size_t n, Branch branch);

} // namespace quad
} // namespace ppb
