#ifndef QMI_POLYNOMIAL_HPP
#define QMI_POLYNOMIAL_HPP

#include <limits>
#include <vector>

#include "qmi/rational.hpp"

namespace qmi {

/// Degree assigned to the zero polynomial; ordered below every integer so
/// that "degree <= d" works uniformly down to d = -1 and beyond.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Canonical form: empty coefficient list is the zero polynomial, otherwise
/// the last coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const {
        return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& leading_coefficient() const;

    Rational operator()(const Rational& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;

    /// p(x + d): the polynomial evaluated on the shifted argument.
    Polynomial shifted_argument(long d) const;

    /// p(x + 1) - p(x); drops the degree by exactly one for nonconstant p.
    Polynomial forward_difference() const;

    bool operator==(const Polynomial&) const = default;

  private:
    std::vector<Rational> coeffs_;
};

}  // namespace qmi

#endif
