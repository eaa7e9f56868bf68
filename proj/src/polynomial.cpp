#include "qmi/polynomial.hpp"

#include <stdexcept>

namespace qmi {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim(coeffs_);
}

Polynomial Polynomial::constant(Rational c) {
    if (c == 0) return Polynomial{};
    return Polynomial{{std::move(c)}};
}

const Rational& Polynomial::leading_coefficient() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial{};
    std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    for (auto& a : out) a *= c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted_argument(long d) const {
    // Sum a_i (x + d)^i, building the powers of (x + d) incrementally.
    Polynomial result;
    Polynomial power = Polynomial::constant(1);
    const Polynomial base{{Rational(d), Rational(1)}};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) power = power * base;
        result = result + power * coeffs_[i];
    }
    return result;
}

Polynomial Polynomial::forward_difference() const {
    return shifted_argument(1) - *this;
}

}  // namespace qmi
