#ifndef QMI_SEQUENCE_HPP
#define QMI_SEQUENCE_HPP

#include <span>
#include <vector>

#include "qmi/polynomial.hpp"

namespace qmi {

/// A sequence over j = 1, 2, ... given by an explicit prefix (indices
/// 1..J0) followed by a polynomial tail (value tail(j) for every j > J0).
/// Construction canonicalizes: prefix entries that already agree with the
/// tail are absorbed, so structural equality is pointwise equality.
class EventuallyPolynomialSeq {
  public:
    EventuallyPolynomialSeq() = default;
    EventuallyPolynomialSeq(std::vector<Rational> prefix, Polynomial tail);

    static EventuallyPolynomialSeq constant(Rational c);

    /// Value at index j >= 1. Throws std::domain_error for j < 1.
    Rational at(long j) const;

    long prefix_length() const { return static_cast<long>(prefix_.size()); }
    const std::vector<Rational>& prefix() const { return prefix_; }
    const Polynomial& tail() const { return tail_; }

    /// result(j) = this(j + d), d >= 0.
    EventuallyPolynomialSeq shifted(long d) const;

    /// Forward difference: result(j) = this(j + 1) - this(j).
    EventuallyPolynomialSeq difference() const;

    /// True iff the whole sequence (every j >= 1) agrees with one
    /// polynomial of degree <= d. d = -1 (or kZeroPolyDegree) asks for the
    /// identically zero sequence.
    bool is_polynomial_of_degree_at_most(int d) const;

    bool is_identically_zero() const { return prefix_.empty() && tail_.is_zero(); }

    /// Degree of the whole sequence as a polynomial, or kNotPolynomial
    /// when the prefix breaks away from any single polynomial.
    int whole_sequence_degree() const;

    bool operator==(const EventuallyPolynomialSeq&) const = default;

  private:
    std::vector<Rational> prefix_;
    Polynomial tail_;
};

/// Marker degree for sequences that are not polynomial at all; ordered
/// above every honest degree.
inline constexpr int kNotPolynomial = std::numeric_limits<int>::max();

/// Sum_{p=0}^{m} (-1)^p C(m,p) values[p], where values has m+1 entries.
/// Throws std::domain_error on empty input.
Rational alt_binomial_sum(std::span<const Rational> values);

}  // namespace qmi

#endif
