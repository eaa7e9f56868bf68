#include "qmi/classifier.hpp"

#include <algorithm>

namespace qmi {

namespace {

Rational branch_weight_at(const WeightSpec::BranchWeight& bw, long j) {
    if (j <= static_cast<long>(bw.prefix.size()))
        return bw.prefix[static_cast<std::size_t>(j - 1)];
    return bw.tail_const;
}

// Squared product of the branch weight over positions from+1 .. from+len.
Rational squared_run_product(const WeightSpec::BranchWeight& bw, long from, long len) {
    Rational product = 1;
    for (long u = from + 1; u <= from + len; ++u) {
        const Rational w = branch_weight_at(bw, u);
        product *= w * w;
    }
    return product;
}

// The sequence n |-> pi_k^2(x^r_{i,n+k}) mu(x^r_{i,n+k}) for n >= 1,
// assembled exactly: past both prefixes every weight factor is the tail
// constant and the measure follows its tail polynomial.
EventuallyPolynomialSeq weighted_branch_sequence(const EventuallyPolynomialSeq& mu_seq,
                                                 const WeightSpec::BranchWeight& bw,
                                                 long k) {
    const long cutoff = std::max({static_cast<long>(bw.prefix.size()),
                                  mu_seq.prefix_length() - k, 0L});
    std::vector<Rational> prefix;
    prefix.reserve(static_cast<std::size_t>(cutoff));
    for (long n = 1; n <= cutoff; ++n)
        prefix.push_back(squared_run_product(bw, n, k) * mu_seq.at(n + k));
    const Rational c = bw.tail_const;
    Rational c2k = 1;
    for (long t = 0; t < k; ++t) c2k *= c * c;
    return EventuallyPolynomialSeq(std::move(prefix),
                                   mu_seq.tail().shifted_argument(k) * c2k);
}

// The per-branch-vertex weighted defect as a sequence in the branch
// position j: sum_p (-1)^p C(m,p) pi_{p+k}^2(x^r_{i,j+p+k}) mu(x^r_{i,j+p+k}).
// The operator is k-quasi-m-isometric on this branch iff it vanishes
// identically.
EventuallyPolynomialSeq branch_defect_sequence(const EventuallyPolynomialSeq& mu_seq,
                                               const WeightSpec::BranchWeight& bw,
                                               long k, long m) {
    const long cutoff = std::max({static_cast<long>(bw.prefix.size()),
                                  mu_seq.prefix_length() - k, 0L});
    std::vector<Rational> prefix;
    prefix.reserve(static_cast<std::size_t>(cutoff));
    for (long j = 1; j <= cutoff; ++j) {
        std::vector<Rational> values;
        values.reserve(static_cast<std::size_t>(m + 1));
        for (long p = 0; p <= m; ++p)
            values.push_back(squared_run_product(bw, j, p + k) * mu_seq.at(j + p + k));
        prefix.push_back(alt_binomial_sum(values));
    }
    const Rational c2 = bw.tail_const * bw.tail_const;
    Polynomial tail;
    Rational factor = 1;
    for (long t = 0; t < k; ++t) factor *= c2;
    for (long p = 0; p <= m; ++p) {
        if (p > 0) factor *= c2;
        Polynomial term = mu_seq.tail().shifted_argument(p + k) *
                          (factor * Rational(binomial(m, p)));
        tail = (p % 2 == 0) ? tail + term : tail - term;
    }
    return EventuallyPolynomialSeq(std::move(prefix), std::move(tail));
}

bool degrees_ok(const std::vector<std::pair<std::pair<int, int>, int>>& degrees,
                long bound) {
    return std::all_of(degrees.begin(), degrees.end(), [&](const auto& d) {
        return d.second != kNotPolynomial && d.second <= bound;
    });
}

bool circuit_defects_zero(const std::vector<std::pair<int, Rational>>& defects) {
    return std::all_of(defects.begin(), defects.end(),
                       [](const auto& d) { return d.second == 0; });
}

}  // namespace

Rational defect_circuit(const MeasureSpec& spec, const DefectQuery& q, int r) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(q.m + 1));
    for (long p = 0; p <= q.m; ++p)
        values.push_back(radon_nikodym(spec, VertexId::circuit(r), p + q.k));
    return alt_binomial_sum(values);
}

bool defect_branch_all(const MeasureSpec& spec, const DefectQuery& q, int r, int i) {
    return spec.branch(r, i).shifted(q.k).is_polynomial_of_degree_at_most(
        static_cast<int>(q.m) - 1);
}

ClassificationReport classify_composition(const MeasureSpec& spec,
                                          const DefectQuery& q) {
    if (q.m < 1 || q.k < 0)
        throw std::domain_error("classification requires m >= 1 and k >= 0");
    const GraphSpec& g = spec.graph;
    ClassificationReport report;
    for (int r = 1; r <= g.kappa; ++r)
        report.circuit_defects.emplace_back(r, defect_circuit(spec, q, r));
    for (int r = 1; r <= g.kappa; ++r)
        for (int i = 1; i <= g.branches_at(r); ++i)
            report.branch_degrees.push_back(
                {{r, i}, spec.branch(r, i).shifted(q.k).whole_sequence_degree()});

    const bool circuit_ok = circuit_defects_zero(report.circuit_defects);
    const bool per_vertex = circuit_ok && degrees_ok(report.branch_degrees, q.m - 1);
    if (q.m == 1) {
        report.verdict = per_vertex;
        report.criterion_used = Criterion::PerVertex;
        return report;
    }
    const bool theorem_form = circuit_ok && degrees_ok(report.branch_degrees, q.m - 2);
    if (theorem_form != per_vertex)
        throw InternalInvariantError(
            "branch-degree criterion disagrees with the per-vertex criterion");
    report.verdict = theorem_form;
    report.criterion_used = Criterion::TheoremForm;
    return report;
}

ClassificationReport classify_strict(const MeasureSpec& spec, const DefectQuery& q) {
    if (q.m < 2) throw std::domain_error("strictness requires m >= 2");
    ClassificationReport report = classify_composition(spec, q);
    report.strict =
        report.verdict && !classify_composition(spec, {q.k, q.m - 1}).verdict;
    return report;
}

ClassificationReport classify_m_isometry(const MeasureSpec& spec, long m) {
    if (m < 2) throw std::domain_error("m-isometry classification requires m >= 2");
    ClassificationReport report = classify_composition(spec, {0, m});
    const GraphSpec& g = spec.graph;
    const bool only_last = std::all_of(g.eta.begin(), g.eta.end() - 1,
                                       [](int e) { return e == 0; });
    if (only_last)
        report.notes.push_back(
            "single branching vertex at the end of the circuit; the branch-degree "
            "test alone decides together with the circuit defects");
    return report;
}

ClassificationReport classify_weighted(const MeasureSpec& spec, const WeightSpec& w,
                                       const DefectQuery& q) {
    if (q.m < 1 || q.k < 0)
        throw std::domain_error("classification requires m >= 1 and k >= 0");
    const GraphSpec& g = spec.graph;
    ClassificationReport report;
    for (int r = 1; r <= g.kappa; ++r) {
        std::vector<Rational> values;
        values.reserve(static_cast<std::size_t>(q.m + 1));
        for (long p = 0; p <= q.m; ++p)
            values.push_back(weighted_gram(spec, w, VertexId::circuit(r), p + q.k));
        report.circuit_defects.emplace_back(r, alt_binomial_sum(values));
    }
    bool branches_ok = true;
    bool degrees_in_bound = true;
    for (int r = 1; r <= g.kappa; ++r) {
        for (int i = 1; i <= g.branches_at(r); ++i) {
            const auto& mu_seq = spec.branch(r, i);
            const auto& bw = w.branch(r, i);
            const int degree =
                weighted_branch_sequence(mu_seq, bw, q.k).whole_sequence_degree();
            report.branch_degrees.push_back({{r, i}, degree});
            if (degree == kNotPolynomial || degree > q.m - 1) degrees_in_bound = false;
            const bool vanish =
                branch_defect_sequence(mu_seq, bw, q.k, q.m).is_identically_zero();
            report.branch_defects_vanish.push_back({{r, i}, vanish});
            branches_ok = branches_ok && vanish;
        }
    }
    const bool circuit_ok = circuit_defects_zero(report.circuit_defects);
    if (q.m == 1) {
        report.verdict = circuit_ok && branches_ok;
        report.criterion_used = Criterion::PerVertex;
        return report;
    }
    report.verdict = circuit_ok && branches_ok && degrees_in_bound;
    report.criterion_used = Criterion::WeightedTheoremForm;
    return report;
}

Rational vertex_defect(const MeasureSpec& spec, const WeightSpec* w,
                       const DefectQuery& q, const VertexId& v) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(q.m + 1));
    for (long p = 0; p <= q.m; ++p)
        values.push_back(w ? weighted_gram(spec, *w, v, p + q.k)
                           : radon_nikodym(spec, v, p + q.k));
    return alt_binomial_sum(values);
}

std::string degree_to_string(int degree) {
    if (degree == kZeroPolyDegree) return "-inf";
    if (degree == kNotPolynomial) return "not-polynomial";
    return std::to_string(degree);
}

}  // namespace qmi
