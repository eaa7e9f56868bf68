#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmi/examples.hpp"
#include "support.hpp"

using namespace qmi;

namespace {
Rational q(const char* s) { return parse_rational(s); }

const MeasureSpec& example_measure(const char* id) {
    return builtin_example(id).spec.measure;
}

Rational circuit_defect_of(const ClassificationReport& report, int r) {
    for (const auto& [rr, d] : report.circuit_defects)
        if (rr == r) return d;
    throw std::logic_error("no such circuit defect");
}
}  // namespace

TEST_CASE("defect_circuit") {
    const auto& e1 = example_measure("e1");
    CHECK(defect_circuit(e1, {1, 2}, 1) == q("0"));
    CHECK(defect_circuit(e1, {1, 2}, 2) == q("0"));
    CHECK(defect_circuit(e1, {1, 2}, 3) == q("0"));
    CHECK(defect_circuit(e1, {1, 1}, 2) == q("-2"));

    const auto& e2 = example_measure("e2");
    CHECK(defect_circuit(e2, {2, 2}, 3) == q("0"));
}

TEST_CASE("defect_branch_all") {
    MeasureSpec spec;
    spec.graph = {1, {1}};
    spec.circuit_mu = {q("1")};
    // prefix [1], tail 2j-1: the prefix matches the tail, so the whole
    // sequence is linear and all third differences vanish.
    spec.branch_mu[{1, 1}] =
        EventuallyPolynomialSeq({q("1")}, Polynomial({q("-1"), q("2")}));
    CHECK(defect_branch_all(spec, {0, 3}, 1, 1));
    CHECK(defect_branch_all(spec, {0, 2}, 1, 1));
    CHECK_FALSE(defect_branch_all(spec, {0, 1}, 1, 1));

    // A genuine prefix break is repaired by shifting past it.
    spec.branch_mu[{1, 1}] = EventuallyPolynomialSeq({q("7")}, Polynomial({q("1")}));
    CHECK_FALSE(defect_branch_all(spec, {0, 2}, 1, 1));
    CHECK(defect_branch_all(spec, {1, 2}, 1, 1));
}

TEST_CASE("classify_composition on the examples") {
    const auto r1 = classify_composition(example_measure("e1"), {1, 2});
    CHECK(r1.verdict);
    CHECK(r1.criterion_used == Criterion::TheoremForm);
    for (const auto& [r, d] : r1.circuit_defects) CHECK(d == 0);

    const auto r1f = classify_composition(example_measure("e1"), {1, 1});
    CHECK_FALSE(r1f.verdict);
    CHECK(r1f.criterion_used == Criterion::PerVertex);
    CHECK(circuit_defect_of(r1f, 2) == q("-2"));

    const auto r2 = classify_composition(example_measure("e2"), {2, 2});
    CHECK(r2.verdict);
    for (const auto& [r, d] : r2.circuit_defects) CHECK(d == 0);
}

TEST_CASE("classify_strict") {
    const auto r1 = classify_strict(example_measure("e1"), {1, 2});
    CHECK(r1.verdict);
    CHECK(r1.strict);

    // e2 is already 2-quasi-2-isometric, so at m=3 the verdict holds but
    // strictness fails.
    const auto r2 = classify_strict(example_measure("e2"), {2, 3});
    CHECK(r2.verdict);
    CHECK_FALSE(r2.strict);

    CHECK_THROWS_AS(classify_strict(example_measure("e1"), {1, 1}),
                    std::domain_error);
}

TEST_CASE("classify_m_isometry") {
    // e1 at k=0, m=2: every circuit defect 1 - 2 h_1 + h_2 vanishes and the
    // branch measures are constant, so e1 is already a 2-isometry.
    const auto r1 = classify_m_isometry(example_measure("e1"), 2);
    CHECK(r1.verdict);
    for (const auto& [r, d] : r1.circuit_defects) CHECK(d == 0);
    CHECK(r1.notes.empty());  // e1 branches at x_1, not at x_kappa

    // The single-branching-vertex specialization is flagged when only the
    // last circuit vertex carries branches.
    MeasureSpec last;
    last.graph = {3, {0, 0, 1}};
    last.circuit_mu = {q("1"), q("1"), q("1")};
    last.branch_mu[{3, 1}] = EventuallyPolynomialSeq({}, Polynomial({q("2")}));
    CHECK_FALSE(classify_m_isometry(last, 2).notes.empty());

    // kappa=1 with a linear branch measure: the single circuit condition is
    // implied by the branch degree bound, so the verdict is true for any
    // circuit measure.
    for (const char* mu1 : {"1", "7/3", "50"}) {
        MeasureSpec spec;
        spec.graph = {1, {1}};
        spec.circuit_mu = {q(mu1)};
        spec.branch_mu[{1, 1}] =
            EventuallyPolynomialSeq({}, Polynomial({q("0"), q("1")}));
        CHECK(classify_m_isometry(spec, 3).verdict);
        CHECK_FALSE(classify_m_isometry(spec, 2).verdict);
    }
}

TEST_CASE("monotonicity in m on a constructed-true spec") {
    std::mt19937 rng(60);
    for (long m = 2; m <= 4; ++m)
        for (int trial = 0; trial < 10; ++trial) {
            const auto spec = qmitest::random_true_kappa1_spec(rng, m);
            const long k = qmitest::pick(rng, 0, 3);
            CHECK(classify_composition(spec, {k, m}).verdict);
            CHECK(classify_composition(spec, {k, m + 1}).verdict);
            CHECK(classify_composition(spec, {k + 1, m}).verdict);
        }
}

TEST_CASE("classify_weighted reduces to the unweighted classifier at pi = 1") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const auto spec = (trial % 3 == 0)
                              ? qmitest::random_true_kappa1_spec(
                                    rng, qmitest::pick(rng, 2, 4))
                              : qmitest::random_measure_spec(rng);
        const WeightSpec ones = WeightSpec::ones(spec.graph);
        const DefectQuery query{qmitest::pick(rng, 0, 3), qmitest::pick(rng, 1, 4)};
        const auto weighted = classify_weighted(spec, ones, query);
        const auto plain = classify_composition(spec, query);
        CHECK(weighted.verdict == plain.verdict);
        CHECK(weighted.circuit_defects == plain.circuit_defects);
    }
    for (const char* id : {"e1", "e2"}) {
        const auto& e = builtin_example(id);
        const DefectQuery query{*e.spec.k, *e.spec.m};
        const WeightSpec ones = WeightSpec::ones(e.spec.measure.graph);
        CHECK(classify_weighted(e.spec.measure, ones, query).verdict ==
              classify_composition(e.spec.measure, query).verdict);
    }
}

TEST_CASE("classify_weighted on e3") {
    const auto& e3 = builtin_example("e3");
    const auto report = classify_weighted(e3.spec.measure, *e3.spec.weight,
                                          {*e3.spec.k, *e3.spec.m});
    // The weighted circuit defect at x_2 is 15/44, not 0; the claimed
    // classification from the source of the example does not hold here.
    CHECK(circuit_defect_of(report, 2) == q("15/44"));
    CHECK_FALSE(report.verdict);
    CHECK(report.verdict != e3.claimed_verdict);

    // The nonzero defect is confirmed by the independent weighted
    // preimage-sum oracle.
    std::vector<Rational> values;
    for (long p = 0; p <= *e3.spec.m; ++p)
        values.push_back(wgram_oracle(e3.spec.measure, *e3.spec.weight,
                                      VertexId::circuit(2), p + *e3.spec.k));
    CHECK(alt_binomial_sum(values) == q("15/44"));

    // The branch vertices fail too.
    for (const auto& [key, vanish] : report.branch_defects_vanish)
        CHECK_FALSE(vanish);
    CHECK(vertex_defect(e3.spec.measure, &*e3.spec.weight, {1, 2},
                        VertexId::branch(1, 1, 1)) == q("9/16"));
}

TEST_CASE("weight zero on one branch silences it") {
    // Two branches with arbitrary measures; weight 0 on the second kills its
    // contribution, so the weighted verdict matches the one-branch spec with
    // pi = 1 everywhere else.
    MeasureSpec spec;
    spec.graph = {1, {2}};
    spec.circuit_mu = {q("2")};
    spec.branch_mu[{1, 1}] = EventuallyPolynomialSeq({}, Polynomial({q("3")}));
    spec.branch_mu[{1, 2}] =
        EventuallyPolynomialSeq({q("5"), q("1/7")}, Polynomial({q("0"), q("2"), q("1")}));

    WeightSpec w = WeightSpec::ones(spec.graph);
    w.branch_pi[{1, 2}] = WeightSpec::BranchWeight{{}, q("0")};

    MeasureSpec reduced;
    reduced.graph = {1, {1}};
    reduced.circuit_mu = {q("2")};
    reduced.branch_mu[{1, 1}] = spec.branch_mu.at({1, 1});

    for (long k = 1; k <= 3; ++k)
        for (long m = 1; m <= 3; ++m) {
            const auto weighted = classify_weighted(spec, w, {k, m});
            const auto plain = classify_composition(reduced, {k, m});
            CHECK(weighted.verdict == plain.verdict);
            CHECK(weighted.circuit_defects[0].second ==
                  plain.circuit_defects[0].second);
        }

    // At k = 0 the p = 0 term of the defect at a silenced branch vertex
    // survives (it is mu itself), so the verdict is false regardless.
    for (long m = 1; m <= 3; ++m) CHECK_FALSE(classify_weighted(spec, w, {0, m}).verdict);
}

TEST_CASE("vertex_defect matches the report entries") {
    std::mt19937 rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        const auto spec = qmitest::random_measure_spec(rng);
        const DefectQuery query{qmitest::pick(rng, 0, 2), qmitest::pick(rng, 1, 3)};
        const auto report = classify_composition(spec, query);
        for (const auto& [r, d] : report.circuit_defects)
            CHECK(vertex_defect(spec, nullptr, query, VertexId::circuit(r)) == d);
    }
}

TEST_CASE("degree_to_string") {
    CHECK(degree_to_string(kZeroPolyDegree) == "-inf");
    CHECK(degree_to_string(kNotPolynomial) == "not-polynomial");
    CHECK(degree_to_string(2) == "2");
}
