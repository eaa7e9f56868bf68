#include "qmi/rational.hpp"

#include <stdexcept>

namespace qmi {

std::string to_string(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') pos = 1;
    if (pos == text.size()) throw std::invalid_argument("sign without digits");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("invalid digit in rational literal: " +
                                        std::string(text));
    }
    return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(num, den);
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long t = 1; t <= k; ++t) {
        result *= (n - k + t);
        result /= t;
    }
    return result;
}

}  // namespace qmi
