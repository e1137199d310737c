#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ppb {

using Complex = std::complex<double>;

// Dense univariate polynomial with complex coefficients, ascending powers:
// p(z) = coeffs[0] + coeffs[1] z + ... + coeffs[d] z^d.
class ComplexPolynomial {
  public:
    ComplexPolynomial() : coeffs_(1, Complex(0.0)) {}
    explicit ComplexPolynomial(std::vector<Complex> coeffs);
    static ComplexPolynomial constant(Complex c);
    static ComplexPolynomial monomial(std::size_t k, Complex c = Complex(1.0));

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Complex(0.0);
    }

    Complex operator()(Complex z) const; // Horner
    ComplexPolynomial derivative() const;
    ComplexPolynomial conjugated() const;    // coefficient-wise conjugate
    ComplexPolynomial shifted_up(std::size_t k) const; // multiply by z^k
    // Taylor shift: returns q with q(z) = p(z + t).
    ComplexPolynomial translated(Complex t) const;

    ComplexPolynomial& operator+=(const ComplexPolynomial& o);
    ComplexPolynomial& operator-=(const ComplexPolynomial& o);
    ComplexPolynomial& operator*=(Complex s);
    friend ComplexPolynomial operator+(ComplexPolynomial a, const ComplexPolynomial& b) {
        return a += b;
    }
    friend ComplexPolynomial operator-(ComplexPolynomial a, const ComplexPolynomial& b) {
        return a -= b;
    }
    friend ComplexPolynomial operator*(ComplexPolynomial a, Complex s) { return a *= s; }
    friend ComplexPolynomial operator*(Complex s, ComplexPolynomial a) { return a *= s; }
    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);

    double max_abs_coeff() const;
    // Trailing zero coefficients are kept; degree() reports storage size, not
    // the mathematical degree. trimmed() drops them (always keeps index 0).
    ComplexPolynomial trimmed() const;

  private:
    std::vector<Complex> coeffs_;
};

} // namespace ppb
