#ifndef QMI_RATIONAL_HPP
#define QMI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace qmi {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Always reduced, denominator > 0, equality structural.
using Rational = boost::multiprecision::cpp_rational;

/// Renders "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);

/// Parses "n" or "n/d". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact binomial coefficient C(n, k); 0 when k > n.
Integer binomial(long n, long k);

}  // namespace qmi

#endif
