#include "qmi/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmi {

const EventuallyPolynomialSeq& MeasureSpec::branch(int r, int i) const {
    const auto it = branch_mu.find({r, i});
    if (it == branch_mu.end())
        throw std::domain_error("no measure sequence for branch (" + std::to_string(r) +
                                "," + std::to_string(i) + ")");
    return it->second;
}

const WeightSpec::BranchWeight& WeightSpec::branch(int r, int i) const {
    const auto it = branch_pi.find({r, i});
    if (it == branch_pi.end())
        throw std::domain_error("no weight for branch (" + std::to_string(r) + "," +
                                std::to_string(i) + ")");
    return it->second;
}

WeightSpec WeightSpec::ones(const GraphSpec& g) {
    WeightSpec w;
    w.graph = g;
    w.circuit_pi.assign(static_cast<std::size_t>(g.kappa), Rational(1));
    for (int r = 1; r <= g.kappa; ++r)
        for (int i = 1; i <= g.branches_at(r); ++i)
            w.branch_pi[{r, i}] = BranchWeight{{}, Rational(1)};
    return w;
}

void WeightSpec::check() const {
    graph.check();
    if (static_cast<int>(circuit_pi.size()) != graph.kappa)
        throw std::invalid_argument("circuit_pi must have exactly kappa entries");
    for (int r = 1; r <= graph.kappa; ++r)
        for (int i = 1; i <= graph.branches_at(r); ++i)
            branch(r, i);
    if (static_cast<int>(branch_pi.size()) !=
        static_cast<int>([&] {
            int n = 0;
            for (int e : graph.eta) n += e;
            return n;
        }()))
        throw std::invalid_argument("branch_pi has entries for unknown branches");
}

Rational mu(const MeasureSpec& spec, const VertexId& v) {
    check_vertex(spec.graph, v);
    if (v.is_circuit()) return spec.circuit_mu[static_cast<std::size_t>(v.r - 1)];
    return spec.branch(v.r, v.i).at(v.j);
}

Rational mu_sum(const MeasureSpec& spec, std::span<const VertexId> vs) {
    Rational sum = 0;
    for (const auto& v : vs) sum += mu(spec, v);
    return sum;
}

Rational pi(const WeightSpec& spec, const VertexId& v) {
    check_vertex(spec.graph, v);
    if (v.is_circuit()) return spec.circuit_pi[static_cast<std::size_t>(v.r - 1)];
    const auto& bw = spec.branch(v.r, v.i);
    if (v.j <= static_cast<long>(bw.prefix.size()))
        return bw.prefix[static_cast<std::size_t>(v.j - 1)];
    return bw.tail_const;
}

namespace {

// Ceiling of the Cauchy root bound 1 + max|a_i / a_D|; every real root of
// the polynomial has absolute value below it. 0 for degree <= 0.
long cauchy_root_bound(const Polynomial& p) {
    if (p.degree() <= 0) return 0;
    const auto& c = p.coefficients();
    Rational ratio_max = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        ratio_max = std::max(ratio_max, Rational(abs(Rational(c[i] / c.back()))));
    const Rational bound = 1 + ratio_max;
    const Integer num = numerator(bound), den = denominator(bound);
    return static_cast<long>((num + den - 1) / den);
}

// Analysis horizon for one branch sequence: past it, the tail is positive,
// increasing (for nonconstant tails) and its step ratio q(j+1)/q(j) is
// monotone, so the ratio scan up to horizon+1 captures the exact supremum.
long ratio_horizon(const EventuallyPolynomialSeq& s) {
    const Polynomial& q = s.tail();
    const Polynomial dq = q.forward_difference();
    // Discrete log-convexity test: sign of q(x+1)^2 - q(x) q(x+2) controls
    // whether the step ratio rises or falls.
    const Polynomial n = q.shifted_argument(1) * q.shifted_argument(1) -
                         q * q.shifted_argument(2);
    const long bound = std::max({cauchy_root_bound(q), cauchy_root_bound(dq),
                                 cauchy_root_bound(n)});
    return s.prefix_length() + std::max(q.degree(), 0) + 1 + bound;
}

}  // namespace

ValidationReport validate(const MeasureSpec& spec) {
    ValidationReport report;
    try {
        spec.graph.check();
    } catch (const std::exception& e) {
        report.errors.emplace_back(e.what());
        return report;
    }
    if (static_cast<int>(spec.circuit_mu.size()) != spec.graph.kappa) {
        report.errors.emplace_back("circuit_mu must have exactly kappa entries");
        return report;
    }
    for (int r = 1; r <= spec.graph.kappa; ++r)
        for (int i = 1; i <= spec.graph.branches_at(r); ++i)
            if (!spec.branch_mu.contains({r, i})) {
                report.errors.emplace_back("missing measure sequence for branch (" +
                                           std::to_string(r) + "," + std::to_string(i) +
                                           ")");
                return report;
            }
    if (spec.branch_mu.size() != [&] {
            std::size_t n = 0;
            for (int e : spec.graph.eta) n += static_cast<std::size_t>(e);
            return n;
        }()) {
        report.errors.emplace_back("branch_mu has entries for unknown branches");
        return report;
    }

    for (int r = 1; r <= spec.graph.kappa; ++r)
        if (mu(spec, VertexId::circuit(r)) <= 0)
            report.errors.push_back("nonpositive measure at " +
                                    VertexId::circuit(r).encode());

    long max_horizon = 0;
    for (const auto& [key, seq] : spec.branch_mu) {
        const auto [r, i] = key;
        const Polynomial& tail = seq.tail();
        if (tail.is_zero() || tail.leading_coefficient() <= 0) {
            report.errors.push_back("branch (" + std::to_string(r) + "," +
                                    std::to_string(i) +
                                    ") tail must have positive leading coefficient");
            continue;
        }
        const long horizon = ratio_horizon(seq);
        max_horizon = std::max(max_horizon, horizon + 1);
        for (long j = 1; j <= horizon + 1; ++j)
            if (seq.at(j) <= 0)
                report.errors.push_back("nonpositive measure at " +
                                        VertexId::branch(r, i, j).encode());
    }
    if (!report.errors.empty()) return report;

    // sup h_1: circuit vertices by the closed form, branch vertices by the
    // ratio scan; past the horizon the ratio is pinned between 1 and its
    // last scanned value.
    Rational sup = 0;
    for (int r = 1; r <= spec.graph.kappa; ++r) {
        const int up = phi2(r + 1, spec.graph.kappa);
        Rational num = mu(spec, VertexId::circuit(up));
        for (int i = 1; i <= spec.graph.branches_at(r); ++i)
            num += mu(spec, VertexId::branch(r, i, 1));
        sup = std::max(sup, num / mu(spec, VertexId::circuit(r)));
    }
    for (const auto& [key, seq] : spec.branch_mu) {
        const long horizon = ratio_horizon(seq);
        for (long j = 1; j <= horizon + 1; ++j)
            sup = std::max(sup, seq.at(j + 1) / seq.at(j));
    }

    report.valid = true;
    report.sup_h1 = sup;
    report.horizon = max_horizon;
    return report;
}

}  // namespace qmi
