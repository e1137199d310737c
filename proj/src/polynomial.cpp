#include "ppb/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppb {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Complex(0.0));
}

ComplexPolynomial ComplexPolynomial::constant(Complex c) {
    return ComplexPolynomial(std::vector<Complex>{c});
}

ComplexPolynomial ComplexPolynomial::monomial(std::size_t k, Complex c) {
    std::vector<Complex> v(k + 1, Complex(0.0));
    v[k] = c;
    return ComplexPolynomial(std::move(v));
}

Complex ComplexPolynomial::operator()(Complex z) const {
    Complex acc(0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (coeffs_.size() == 1) return constant(Complex(0.0));
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::conjugated() const {
    std::vector<Complex> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = std::conj(coeffs_[k]);
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::shifted_up(std::size_t k) const {
    std::vector<Complex> c(coeffs_.size() + k, Complex(0.0));
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::translated(Complex t) const {
    // q_j = sum_{k>=j} c_k C(k,j) t^{k-j}
    const std::size_t d = coeffs_.size() - 1;
    std::vector<Complex> q(d + 1, Complex(0.0));
    for (std::size_t j = 0; j <= d; ++j) {
        double binom = 1.0; // C(j, j)
        Complex tp(1.0);
        Complex acc(0.0);
        for (std::size_t k = j; k <= d; ++k) {
            acc += coeffs_[k] * binom * tp;
            binom *= static_cast<double>(k + 1) / static_cast<double>(k + 1 - j);
            tp *= t;
        }
        q[j] = acc;
    }
    return ComplexPolynomial(std::move(q));
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Complex(0.0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Complex(0.0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ComplexPolynomial(std::move(c));
}

double ComplexPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

ComplexPolynomial ComplexPolynomial::trimmed() const {
    std::size_t n = coeffs_.size();
    while (n > 1 && coeffs_[n - 1] == Complex(0.0)) --n;
    return ComplexPolynomial(std::vector<Complex>(coeffs_.begin(),
                                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

} // namespace ppb
