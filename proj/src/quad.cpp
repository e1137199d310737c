#include "ppb/quad.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ppb/errors.hpp"

namespace ppb {
namespace quad {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_exponent(Complex a) {
    if (a.real() > 0.0)
        throw std::domain_error("moment integral diverges: Re(a) > 0");
    if (a.real() == 0.0 && a.imag() == 0.0)
        throw std::domain_error("moment integral diverges: a = 0");
}

void check_schedule(const std::vector<double>& eps) {
    if (eps.size() < 2)
        throw std::invalid_argument("eps schedule needs at least 2 entries");
    double prev = std::numeric_limits<double>::infinity();
    for (double e : eps) {
        if (!(e > 0.0) || !(e < prev))
            throw std::invalid_argument("eps schedule must be positive and strictly decreasing");
        prev = e;
    }
}

} // namespace

Complex moment_integral(const ComplexPolynomial& p, Complex a) {
    check_exponent(a);
    // M_{2j}(a) = (2j-1)!! sqrt(2 pi) (-a)^{-(2j+1)/2}, principal branch.
    // Iterated products of exp(-(1/2) Log(-a)) stay on the principal branch:
    // no root of a product is ever taken.
    const Complex inv_root = std::exp(-0.5 * std::log(-a)); // (-a)^{-1/2}
    const Complex inv = inv_root * inv_root;                // (-a)^{-1}
    Complex moment = std::sqrt(kTwoPi) * inv_root;          // M_0
    double double_factorial = 1.0;                          // (2j-1)!!, (-1)!! = 1
    Complex acc(0.0);
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); k += 2) {
        if (k > 0) {
            double_factorial *= static_cast<double>(k - 1);
            moment *= inv;
        }
        if (c[k] != Complex(0.0)) acc += c[k] * (double_factorial * moment);
    }
    return acc;
}

Complex moment_integral_linear(const ComplexPolynomial& p, Complex a, Complex b) {
    check_exponent(a);
    if (b == Complex(0.0)) return moment_integral(p, a);
    // Complete the square: a x^2/2 + b x = a (x + b/a)^2 / 2 - b^2 / (2a).
    const Complex shift = -b / a;
    return std::exp(-b * b / (2.0 * a)) * moment_integral(p.translated(shift), a);
}

RegularizedValue extrapolate_to_zero(const std::vector<double>& eps,
                                     const std::vector<Complex>& values) {
    if (eps.size() != values.size())
        throw std::invalid_argument("eps and values size mismatch");
    check_schedule(eps);
    // Neville tableau for the interpolating polynomial in eps, evaluated at 0.
    std::vector<Complex> t = values;
    const std::size_t n = t.size();
    double last_corr = std::numeric_limits<double>::infinity();
    Complex result = t[0];
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i + k < n; ++i) {
            t[i] = (eps[i] * t[i + 1] - eps[i + k] * t[i]) / (eps[i] - eps[i + k]);
        }
        const double corr = std::abs(t[0] - result);
        result = t[0];
        if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
            throw numerical_error("extrapolation produced non-finite values");
        if (k + 1 == n && corr > 10.0 * last_corr && corr > 1e-12 * std::abs(result))
            throw numerical_error("extrapolation diverged: corrections are growing");
        last_corr = corr;
    }
    return RegularizedValue{result, last_corr};
}

RegularizedValue regularized_pairing(const ComplexPolynomial& p, double a_imag,
                                     const std::vector<double>& eps_schedule) {
    if (a_imag == 0.0)
        throw std::invalid_argument("regularized pairing needs a pure-Fresnel exponent, Im(a) != 0");
    check_schedule(eps_schedule);
    std::vector<Complex> values;
    values.reserve(eps_schedule.size());
    for (double eps : eps_schedule)
        values.push_back(moment_integral(p, Complex(-eps, a_imag)));
    return extrapolate_to_zero(eps_schedule, values);
}

Complex orthogonality_diagonal(std::size_t n, Branch branch) {
    const double sign = branch_sign(branch);
    const Complex two_i(0.0, 2.0 * sign);
    Complex pow(1.0);
    double factorial = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        pow *= two_i;
        factorial *= static_cast<double>(k);
    }
    const Complex sqrt_ipi = std::sqrt(Complex(0.0, sign * 3.14159265358979323846));
    return pow * factorial * sqrt_ipi;
}

Complex fresnel_orthogonality(std::size_t m, std::size_t n, Branch branch) {
    // conj(H^-+_m) = H^+-_m on the real axis, so the integrand is the
    // polynomial H^+-_m H^+-_n against the pure-Fresnel weight e^{+- i xi^2}.
    if ((m + n) % 2 == 1) {
        // Odd total parity: every even coefficient of the product vanishes,
        // so the moment sum is bit-exact zero.
        return Complex(0.0);
    }
    const ComplexPolynomial integrand =
        polys::hermite_like_coeffs(opposite(branch), m).conjugated() *
        polys::hermite_like_coeffs(branch, n);
    return moment_integral(integrand, Complex(0.0, 2.0 * branch_sign(branch)));
}

} // namespace quad
} // namespace ppb
