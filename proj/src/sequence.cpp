#include "qmi/sequence.hpp"

#include <stdexcept>

namespace qmi {

EventuallyPolynomialSeq::EventuallyPolynomialSeq(std::vector<Rational> prefix,
                                                 Polynomial tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    // Absorb prefix entries the tail already reproduces.
    while (!prefix_.empty() &&
           prefix_.back() == tail_(Rational(static_cast<long>(prefix_.size())))) {
        prefix_.pop_back();
    }
}

EventuallyPolynomialSeq EventuallyPolynomialSeq::constant(Rational c) {
    return EventuallyPolynomialSeq({}, Polynomial::constant(std::move(c)));
}

Rational EventuallyPolynomialSeq::at(long j) const {
    if (j < 1) throw std::domain_error("sequence index must be >= 1");
    if (j <= prefix_length()) return prefix_[static_cast<std::size_t>(j - 1)];
    return tail_(Rational(j));
}

EventuallyPolynomialSeq EventuallyPolynomialSeq::shifted(long d) const {
    if (d < 0) throw std::domain_error("shift distance must be >= 0");
    std::vector<Rational> prefix;
    for (long j = 1; j + d <= prefix_length(); ++j)
        prefix.push_back(prefix_[static_cast<std::size_t>(j + d - 1)]);
    return EventuallyPolynomialSeq(std::move(prefix), tail_.shifted_argument(d));
}

EventuallyPolynomialSeq EventuallyPolynomialSeq::difference() const {
    std::vector<Rational> prefix;
    for (long j = 1; j <= prefix_length(); ++j) prefix.push_back(at(j + 1) - at(j));
    return EventuallyPolynomialSeq(std::move(prefix), tail_.forward_difference());
}

bool EventuallyPolynomialSeq::is_polynomial_of_degree_at_most(int d) const {
    // Canonical form: any surviving prefix entry disagrees with the tail,
    // so the whole sequence is a polynomial iff the prefix is empty.
    return prefix_.empty() && tail_.degree() <= d;
}

int EventuallyPolynomialSeq::whole_sequence_degree() const {
    if (!prefix_.empty()) return kNotPolynomial;
    return tail_.degree();
}

Rational alt_binomial_sum(std::span<const Rational> values) {
    if (values.empty()) throw std::domain_error("alt_binomial_sum of empty list");
    const long m = static_cast<long>(values.size()) - 1;
    Rational sum = 0;
    for (long p = 0; p <= m; ++p) {
        const Rational term = Rational(binomial(m, p)) * values[static_cast<std::size_t>(p)];
        if (p % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace qmi
