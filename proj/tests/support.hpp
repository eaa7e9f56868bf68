#ifndef QMI_TESTS_SUPPORT_HPP
#define QMI_TESTS_SUPPORT_HPP

#include <random>

#include "qmi/classifier.hpp"
#include "qmi/oracle.hpp"

namespace qmitest {

using namespace qmi;

inline long pick(std::mt19937& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_positive_rational(std::mt19937& rng) {
    return Rational(pick(rng, 1, 9), pick(rng, 1, 9));
}

// Nonnegative coefficients with a positive leading one, so the tail is
// positive at every index >= 1.
inline Polynomial random_positive_tail(std::mt19937& rng, int max_degree) {
    const int degree = static_cast<int>(pick(rng, 0, max_degree));
    std::vector<Rational> coeffs;
    for (int d = 0; d < degree; ++d) coeffs.push_back(Rational(pick(rng, 0, 3)));
    coeffs.push_back(random_positive_rational(rng));
    return Polynomial(std::move(coeffs));
}

inline EventuallyPolynomialSeq random_branch_measure(std::mt19937& rng,
                                                     long max_prefix,
                                                     int max_tail_degree) {
    std::vector<Rational> prefix;
    const long len = pick(rng, 0, max_prefix);
    for (long j = 0; j < len; ++j) prefix.push_back(random_positive_rational(rng));
    return EventuallyPolynomialSeq(std::move(prefix),
                                   random_positive_tail(rng, max_tail_degree));
}

inline MeasureSpec random_measure_spec(std::mt19937& rng, int max_kappa = 4,
                                       int max_eta = 3, long max_prefix = 3,
                                       int max_tail_degree = 2) {
    MeasureSpec spec;
    spec.graph.kappa = static_cast<int>(pick(rng, 1, max_kappa));
    spec.graph.eta.resize(static_cast<std::size_t>(spec.graph.kappa));
    int total = 0;
    for (auto& e : spec.graph.eta) {
        e = static_cast<int>(pick(rng, 0, max_eta));
        total += e;
    }
    if (total == 0) spec.graph.eta[static_cast<std::size_t>(
        pick(rng, 0, spec.graph.kappa - 1))] = 1;
    for (int r = 1; r <= spec.graph.kappa; ++r)
        spec.circuit_mu.push_back(random_positive_rational(rng));
    for (int r = 1; r <= spec.graph.kappa; ++r)
        for (int i = 1; i <= spec.graph.branches_at(r); ++i)
            spec.branch_mu[{r, i}] =
                random_branch_measure(rng, max_prefix, max_tail_degree);
    return spec;
}

inline WeightSpec random_weight_spec(std::mt19937& rng, const GraphSpec& g,
                                     bool allow_zero = false) {
    WeightSpec w;
    w.graph = g;
    auto value = [&] {
        if (allow_zero && pick(rng, 0, 5) == 0) return Rational(0);
        return random_positive_rational(rng);
    };
    for (int r = 1; r <= g.kappa; ++r) w.circuit_pi.push_back(value());
    for (int r = 1; r <= g.kappa; ++r)
        for (int i = 1; i <= g.branches_at(r); ++i) {
            WeightSpec::BranchWeight bw;
            const long len = pick(rng, 0, 2);
            for (long j = 0; j < len; ++j) bw.prefix.push_back(value());
            bw.tail_const = value();
            w.branch_pi[{r, i}] = std::move(bw);
        }
    return w;
}

// A kappa = 1 spec that is k-quasi-m-isometric by construction: each branch
// measure is a pure polynomial of degree <= m-2, which makes the single
// circuit defect vanish automatically.
inline MeasureSpec random_true_kappa1_spec(std::mt19937& rng, long m) {
    MeasureSpec spec;
    spec.graph.kappa = 1;
    spec.graph.eta = {static_cast<int>(pick(rng, 1, 3))};
    spec.circuit_mu.push_back(random_positive_rational(rng));
    for (int i = 1; i <= spec.graph.eta[0]; ++i)
        spec.branch_mu[{1, i}] = EventuallyPolynomialSeq(
            {}, random_positive_tail(rng, static_cast<int>(m) - 2));
    return spec;
}

// All vertices of the graph with branch position <= depth.
inline std::vector<VertexId> vertices_to_depth(const GraphSpec& g, long depth) {
    std::vector<VertexId> out;
    for (int r = 1; r <= g.kappa; ++r) out.push_back(VertexId::circuit(r));
    for (int r = 1; r <= g.kappa; ++r)
        for (int i = 1; i <= g.branches_at(r); ++i)
            for (long j = 1; j <= depth; ++j) out.push_back(VertexId::branch(r, i, j));
    return out;
}

// m-fold forward difference, the independent route for the degree tests.
inline EventuallyPolynomialSeq iterated_difference(EventuallyPolynomialSeq s, long m) {
    for (long t = 0; t < m; ++t) s = s.difference();
    return s;
}

}  // namespace qmitest

#endif
