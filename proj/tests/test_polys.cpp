#include <doctest.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "ppb/errors.hpp"
#include "ppb/polys.hpp"

using ppb::Branch;
using ppb::Complex;
using ppb::ComplexPolynomial;

namespace {

// Independent oracle, exact Gaussian-integer arithmetic throughout:
//   P_0 = 1,  P_{k+1} = P_k' +- 2 i xi P_k,  H^+-_n = (-+ i)^n P_n.
// Every coefficient stays an integer pair well below 2^63 for n <= 20, so the
// construction is free of rounding and independent of the library's
// downward-solved series.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;
};

std::vector<GaussInt> oracle_coeffs(Branch branch, std::size_t n) {
    const std::int64_t s = branch == Branch::Plus ? 1 : -1;
    std::vector<GaussInt> p = {{1, 0}}; // P_0
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<GaussInt> next(p.size() + 1);
        for (std::size_t j = 1; j < p.size(); ++j) { // derivative
            next[j - 1].re += static_cast<std::int64_t>(j) * p[j].re;
            next[j - 1].im += static_cast<std::int64_t>(j) * p[j].im;
        }
        for (std::size_t j = 0; j < p.size(); ++j) { // +- 2 i xi P_k
            next[j + 1].re += -s * 2 * p[j].im;
            next[j + 1].im += s * 2 * p[j].re;
        }
        p = std::move(next);
    }
    // Multiply by (-+ i)^n.
    for (std::size_t r = 0; r < n % 4; ++r)
        for (auto& c : p) c = GaussInt{s * c.im, -s * c.re};
    return p;
}

} // namespace

TEST_CASE("construction matches the exact derivative-recursion oracle, n <= 20") {
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        for (std::size_t n = 0; n <= 20; ++n) {
            const auto expected = oracle_coeffs(branch, n);
            const auto& h = ppb::polys::hermite_like_coeffs(branch, n);
            REQUIRE(h.degree() == n);
            for (std::size_t k = 0; k <= n; ++k) {
                // Exact: both sides are integers below 2^53.
                CHECK(h.coeff(k).real() == static_cast<double>(expected[k].re));
                CHECK(h.coeff(k).imag() == static_cast<double>(expected[k].im));
            }
        }
    }
}

TEST_CASE("low-degree closed forms") {
    const auto& h2 = ppb::polys::hermite_like_coeffs(Branch::Plus, 2);
    CHECK(h2.coeff(0) == Complex(0.0, -2.0));
    CHECK(h2.coeff(1) == Complex(0.0, 0.0));
    CHECK(h2.coeff(2) == Complex(4.0, 0.0));
    const auto& h3 = ppb::polys::hermite_like_coeffs(Branch::Minus, 3);
    CHECK(h3.coeff(1) == Complex(0.0, 12.0));
    CHECK(h3.coeff(3) == Complex(8.0, 0.0));
    const auto& h4 = ppb::polys::hermite_like_coeffs(Branch::Plus, 4);
    CHECK(h4.coeff(0) == Complex(-12.0, 0.0));
    CHECK(h4.coeff(2) == Complex(0.0, -48.0));
    CHECK(h4.coeff(4) == Complex(16.0, 0.0));
}

TEST_CASE("ODE residual vanishes bit-exactly, n <= 20") {
    for (Branch branch : {Branch::Plus, Branch::Minus})
        for (std::size_t n = 0; n <= 20; ++n)
            CHECK(ppb::polys::ode_residual(branch, n).max_abs_coeff() == 0.0);
}

TEST_CASE("three-term recurrence evaluation agrees with the coefficient table") {
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        for (std::size_t n = 0; n <= 15; ++n) {
            const auto& h = ppb::polys::hermite_like_coeffs(branch, n);
            for (Complex z : {Complex(0.0), Complex(1.3), Complex(-0.4, 2.1),
                              Complex(2.0, -1.0)}) {
                const Complex a = ppb::polys::hermite_like_eval(branch, n, z);
                const Complex b = h(z);
                CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
            }
        }
    }
}

TEST_CASE("derivative identity dH_n/dz = 2 n H_{n-1}") {
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        for (std::size_t n = 1; n <= 12; ++n) {
            const auto d = ppb::polys::hermite_like_coeffs(branch, n).derivative();
            const auto& lower = ppb::polys::hermite_like_coeffs(branch, n - 1);
            for (std::size_t k = 0; k < n; ++k)
                CHECK(d.coeff(k) == 2.0 * static_cast<double>(n) * lower.coeff(k));
            const Complex z(0.7, -0.3);
            CHECK(std::abs(ppb::polys::hermite_like_derivative(branch, n, z) - d(z)) <=
                  1e-12 * std::abs(d(z)));
        }
    }
}

TEST_CASE("parity and conjugation symmetries") {
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto& hp = ppb::polys::hermite_like_coeffs(Branch::Plus, n);
        const auto& hm = ppb::polys::hermite_like_coeffs(Branch::Minus, n);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(std::conj(hp.coeff(k)) == hm.coeff(k));
            if ((n - k) % 2 == 1) CHECK(hp.coeff(k) == Complex(0.0)); // parity gaps
        }
        const Complex z(1.1, 0.6);
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        const Complex even = ppb::polys::hermite_like_eval(Branch::Plus, n, -z);
        const Complex base = ppb::polys::hermite_like_eval(Branch::Plus, n, z);
        CHECK(std::abs(even - sign * base) <= 1e-12 * std::abs(base));
    }
}

TEST_CASE("generating function partial sums converge") {
    const Complex z(0.4, 0.9), s(0.5, -0.3);
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const double r25 = ppb::polys::generating_function_residual(branch, z, s, 25);
        const double r10 = ppb::polys::generating_function_residual(branch, z, s, 10);
        CHECK(r25 < 1e-10);
        CHECK(r25 < r10); // tail shrinks with more terms
    }
}

TEST_CASE("rotation onto the real Hermite family") {
    // H^+-_n(z) = e^{+- i pi n / 4} H_n(e^{-+ i pi/4} z).
    const double pi = 3.14159265358979323846;
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const double sign = ppb::branch_sign(branch);
        for (std::size_t n = 0; n <= 8; ++n) {
            const Complex pre = std::polar(1.0, sign * pi / 4.0 * static_cast<double>(n));
            const Complex rot = std::polar(1.0, -sign * pi / 4.0);
            for (double x : {0.0, 0.8, -1.7, 2.5}) {
                const Complex via_real = pre * ppb::polys::hermite_coeffs(n)(rot * x);
                const Complex direct = ppb::polys::hermite_like_eval(branch, n, x);
                CHECK(std::abs(direct - via_real) <= 1e-11 * (1.0 + std::abs(direct)));
            }
        }
    }
}

TEST_CASE("real Hermite baseline") {
    CHECK(ppb::polys::hermite_eval(0, 0.3) == 1.0);
    CHECK(ppb::polys::hermite_eval(1, 0.3) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(ppb::polys::hermite_eval(2, 0.3) == doctest::Approx(4 * 0.09 - 2).epsilon(1e-14));
    CHECK(ppb::polys::hermite_eval(3, 2.0) ==
          doctest::Approx(8 * 8.0 - 12 * 2.0).epsilon(1e-14));
    const auto& h6 = ppb::polys::hermite_coeffs(6);
    CHECK(h6.coeff(6) == Complex(64.0));
    CHECK(h6.coeff(0) == Complex(-120.0));
}

TEST_CASE("degree cap throws") {
    CHECK_THROWS_AS(ppb::polys::hermite_like_coeffs(Branch::Plus, 31), ppb::capacity_error);
    CHECK_THROWS_AS(ppb::polys::hermite_like_coeffs(Branch::Minus, 100), ppb::capacity_error);
    CHECK_NOTHROW(ppb::polys::hermite_like_coeffs(Branch::Plus, 30));
}

TEST_CASE("polynomial utilities") {
    const ComplexPolynomial p({Complex(1, 2), Complex(0, -1), Complex(3, 0)});
    CHECK(p(Complex(2.0)) == Complex(1, 2) + Complex(0, -2) + Complex(12, 0));
    const auto shifted = p.translated(Complex(1.0));
    // q(x) = p(x + 1) evaluated at 0 equals p(1).
    CHECK(std::abs(shifted(Complex(0.0)) - p(Complex(1.0))) < 1e-14);
    CHECK(std::abs(shifted(Complex(-2.5, 0.7)) - p(Complex(-1.5, 0.7))) < 1e-13);
    const auto prod = p * p;
    CHECK(prod.degree() == 4);
    const Complex z(0.3, -0.8);
    CHECK(std::abs(prod(z) - p(z) * p(z)) < 1e-13);
    CHECK(p.conjugated()(std::conj(z)) == std::conj(p(z)));
}
