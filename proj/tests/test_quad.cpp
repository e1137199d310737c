#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ppb/errors.hpp"
#include "ppb/polys.hpp"
#include "ppb/quad.hpp"

using ppb::Branch;
using ppb::Complex;
using ppb::ComplexPolynomial;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent oracle: composite Simpson for integral p(x) e^{a x^2 / 2 + b x} dx
// over a window wide enough that the damped tail is below 1e-16 of the value.
// Valid only for Re(a) < 0; knows nothing of the closed-form moment engine.
Complex simpson_oracle(const ComplexPolynomial& p, Complex a, Complex b = Complex(0.0)) {
    const double decay = -0.5 * a.real();
    const double center = (b / (-a)).real();
    const double L = std::sqrt(44.0 / decay); // e^{-decay L^2} < 1e-19
    const std::size_t intervals = 40000;
    const double lo = center - L, hi = center + L;
    const double h = (hi - lo) / static_cast<double>(intervals);
    auto f = [&](double x) { return p(x) * std::exp(0.5 * a * x * x + b * x); };
    Complex acc = f(lo) + f(hi);
    for (std::size_t i = 1; i < intervals; ++i)
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + h * static_cast<double>(i));
    return acc * (h / 3.0);
}

} // namespace

TEST_CASE("moment integral matches the Simpson oracle") {
    const std::vector<Complex> exponents = {Complex(-2.0, 0.0), Complex(-1.0, 1.0),
                                            Complex(-0.5, -3.0), Complex(-4.0, 2.5)};
    const std::vector<ComplexPolynomial> polys = {
        ComplexPolynomial::constant(Complex(1.0)),
        ComplexPolynomial({Complex(0.5, -1.0), Complex(2.0, 0.0), Complex(0.0, 1.5)}),
        ComplexPolynomial({Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0),
                           Complex(0.0), Complex(0.0), Complex(3.0, -2.0)}),
    };
    for (Complex a : exponents) {
        for (const auto& p : polys) {
            const Complex expected = simpson_oracle(p, a);
            const Complex got = ppb::quad::moment_integral(p, a);
            CHECK(std::abs(got - expected) <= 1e-10 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("linear-term moment integral matches the Simpson oracle") {
    const ComplexPolynomial p({Complex(1.0, 0.5), Complex(-0.5, 0.0), Complex(0.0, 2.0),
                               Complex(1.0, 0.0)});
    for (Complex a : {Complex(-1.5, 0.8), Complex(-3.0, -2.0)}) {
        for (Complex b : {Complex(0.0), Complex(1.2, -0.4), Complex(-0.6, 2.0)}) {
            const Complex expected = simpson_oracle(p, a, b);
            const Complex got = ppb::quad::moment_integral_linear(p, a, b);
            CHECK(std::abs(got - expected) <= 1e-9 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("pure Gaussian closed form") {
    // integral e^{(-1+i) x^2 / 2} dx = sqrt(2 pi / (1 - i)).
    const Complex got =
        ppb::quad::moment_integral(ComplexPolynomial::constant(Complex(1.0)), Complex(-1.0, 1.0));
    CHECK(got.real() == doctest::Approx(1.9473668878447327).epsilon(1e-14));
    CHECK(got.imag() == doctest::Approx(0.8066257758615742).epsilon(1e-14));
}

TEST_CASE("odd moments vanish exactly") {
    for (std::size_t k : {std::size_t(1), std::size_t(3), std::size_t(7)}) {
        const Complex got =
            ppb::quad::moment_integral(ComplexPolynomial::monomial(k), Complex(-2.0, 1.3));
        CHECK(got == Complex(0.0));
    }
}

TEST_CASE("moment integral rejects non-damped exponents") {
    const auto one = ComplexPolynomial::constant(Complex(1.0));
    CHECK_THROWS_AS(ppb::quad::moment_integral(one, Complex(0.5, 1.0)), std::domain_error);
    CHECK_THROWS_AS(ppb::quad::moment_integral(one, Complex(0.0, 0.0)), std::domain_error);
    // Purely oscillatory exponents are legal (Fresnel regime).
    CHECK_NOTHROW(ppb::quad::moment_integral(one, Complex(0.0, 2.0)));
}

TEST_CASE("Fresnel limit of the damped Gaussian") {
    // lim_{eps->0} integral e^{(-eps + i) xi^2} dxi = sqrt(i pi) = 1.2533...(1+i).
    const auto r = ppb::quad::regularized_pairing(ComplexPolynomial::constant(Complex(1.0)), 2.0);
    const double c = 1.2533141373155003;
    CHECK(r.value.real() == doctest::Approx(c).epsilon(1e-7));
    CHECK(r.value.imag() == doctest::Approx(c).epsilon(1e-7));
    CHECK(std::abs(r.value - Complex(c, c)) < 1e-6);
    CHECK(r.error_estimate < 1e-4);

    const auto conj_r =
        ppb::quad::regularized_pairing(ComplexPolynomial::constant(Complex(1.0)), -2.0);
    CHECK(std::abs(conj_r.value - std::conj(r.value)) < 1e-12);
}

TEST_CASE("extrapolation error shrinks with the schedule") {
    const auto one = ComplexPolynomial::constant(Complex(1.0));
    const Complex exact = std::sqrt(Complex(0.0, kPi));
    const std::vector<double> coarse = {0.2, 0.1, 0.05};
    const std::vector<double> fine = {0.1, 0.05, 0.025};
    const double e_coarse =
        std::abs(ppb::quad::regularized_pairing(one, 2.0, coarse).value - exact);
    const double e_fine = std::abs(ppb::quad::regularized_pairing(one, 2.0, fine).value - exact);
    CHECK(e_fine < e_coarse);
    // Third-order tableau: halving the schedule gains about 2^3.
    CHECK(e_coarse / e_fine > 6.0);
    CHECK(e_coarse / e_fine < 10.0);
}

TEST_CASE("extrapolation rejects junk sequences") {
    const std::vector<double> eps = {0.1, 0.05, 0.025};
    CHECK_THROWS_AS(ppb::quad::extrapolate_to_zero(
                        eps, {Complex(1.0), Complex(1e30), Complex(1e60)}),
                    ppb::numerical_error);
    const double nan = std::nan("");
    CHECK_THROWS_AS(
        ppb::quad::extrapolate_to_zero(eps, {Complex(nan), Complex(1.0), Complex(1.0)}),
        ppb::numerical_error);
}

TEST_CASE("orthogonality diagonal closed form") {
    // (+-2i)^n n! sqrt(+- i pi); n = 2, Plus: -8 sqrt(i pi).
    const Complex d2 = ppb::quad::orthogonality_diagonal(2, Branch::Plus);
    CHECK(d2.real() == doctest::Approx(-10.026513098524002).epsilon(1e-14));
    CHECK(d2.imag() == doctest::Approx(-10.026513098524002).epsilon(1e-14));
    for (std::size_t n = 0; n <= 10; ++n) {
        const Complex p = ppb::quad::orthogonality_diagonal(n, Branch::Plus);
        const Complex m = ppb::quad::orthogonality_diagonal(n, Branch::Minus);
        CHECK(std::abs(std::conj(p) - m) <= 1e-15 * std::abs(p));
        if (n > 0) {
            // Ratio to the previous diagonal is +-2i n.
            const Complex prev = ppb::quad::orthogonality_diagonal(n - 1, Branch::Plus);
            const Complex ratio = p / prev;
            CHECK(std::abs(ratio - Complex(0.0, 2.0 * static_cast<double>(n))) <=
                  1e-13 * std::abs(ratio));
        }
    }
}

TEST_CASE("Fresnel pairing reproduces the orthogonality relation") {
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        for (std::size_t m = 0; m < 8; ++m) {
            for (std::size_t n = 0; n < 8; ++n) {
                const Complex got = ppb::quad::fresnel_orthogonality(m, n, branch);
                if (m == n) {
                    const Complex d = ppb::quad::orthogonality_diagonal(n, branch);
                    CHECK(std::abs(got - d) <= 1e-9 * std::abs(d));
                } else if ((m + n) % 2 == 1) {
                    CHECK(got == Complex(0.0)); // parity: exact zero, no quadrature
                } else {
                    const double scale =
                        std::sqrt(std::abs(ppb::quad::orthogonality_diagonal(m, branch)) *
                                  std::abs(ppb::quad::orthogonality_diagonal(n, branch)));
                    CHECK(std::abs(got) <= 1e-10 * scale);
                }
            }
        }
    }
}

TEST_CASE("pairing weight orientation distinguishes the branches") {
    // The Plus pairing carries weight e^{+i xi^2}: its (0,0) value is
    // sqrt(+i pi), first quadrant; Minus gives the conjugate.
    const Complex p00 = ppb::quad::fresnel_orthogonality(0, 0, Branch::Plus);
    CHECK(p00.real() > 0.0);
    CHECK(p00.imag() > 0.0);
    const Complex m00 = ppb::quad::fresnel_orthogonality(0, 0, Branch::Minus);
    CHECK(std::abs(m00 - std::conj(p00)) < 1e-12);
}
