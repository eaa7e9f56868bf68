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

std::size_t count_nonzero(const RationalMatrix& m) {
    std::size_t n = 0;
    for (std::size_t row = 0; row < m.size(); ++row)
        for (std::size_t col = 0; col < m.size(); ++col)
            if (m.at(row, col) != 0) ++n;
    return n;
}
}  // namespace

TEST_CASE("truncation windows") {
    const GraphSpec g{3, {2, 1, 0}};
    const auto t = Truncation::make(g, 4);
    CHECK(t.vertices.size() == 3 + 3 * 4);
    CHECK(std::is_sorted(t.vertices.begin(), t.vertices.end()));
    CHECK(t.index_of(VertexId::circuit(1)) == 0);
    CHECK(t.vertices[static_cast<std::size_t>(
              t.index_of(VertexId::branch(2, 1, 3)))] == VertexId::branch(2, 1, 3));
    CHECK(t.index_of(VertexId::branch(1, 1, 5)) == -1);
    CHECK_THROWS_AS(Truncation::make(g, 0), std::invalid_argument);
}

TEST_CASE("h_oracle by preimage enumeration") {
    const auto& e1 = example_measure("e1");
    CHECK(h_oracle(e1, VertexId::circuit(1), 0) == q("1"));
    CHECK(h_oracle(e1, VertexId::circuit(2), 2) == q("5"));
    CHECK(h_oracle(e1, VertexId::circuit(1), 1) == q("7/5"));

    const auto& e2 = example_measure("e2");
    CHECK(h_oracle(e2, VertexId::circuit(1), 4) == q("3"));
}

TEST_CASE("wgram_oracle by weighted preimage sums") {
    const auto& e3 = builtin_example("e3");
    const auto& spec = e3.spec.measure;
    const WeightSpec& w = *e3.spec.weight;
    CHECK(wgram_oracle(spec, w, VertexId::circuit(1), 1) == q("40/31"));
    CHECK(wgram_oracle(spec, w, VertexId::circuit(2), 3) == q("15/11"));
    CHECK(wgram_oracle(spec, w, VertexId::branch(1, 1, 1), 1) == q("1"));
}

TEST_CASE("truncated_matrix structure") {
    // Smallest graph: self-looping circuit vertex plus one branch chain.
    MeasureSpec tiny;
    tiny.graph = {1, {1}};
    tiny.circuit_mu = {q("1")};
    tiny.branch_mu[{1, 1}] = EventuallyPolynomialSeq({}, Polynomial({q("1")}));
    const auto t = Truncation::make(tiny.graph, 2);
    const auto m = truncated_matrix(tiny, nullptr, t);
    REQUIRE(m.size() == 3);
    CHECK(count_nonzero(m) == 3);
    const auto idx = [&](const VertexId& v) {
        return static_cast<std::size_t>(t.index_of(v));
    };
    CHECK(m.at(idx(VertexId::circuit(1)), idx(VertexId::circuit(1))) == 1);
    CHECK(m.at(idx(VertexId::branch(1, 1, 1)), idx(VertexId::circuit(1))) == 1);
    CHECK(m.at(idx(VertexId::branch(1, 1, 2)), idx(VertexId::branch(1, 1, 1))) == 1);

    // e1 window J=4: the column of Circuit(1) is hit by exactly c:2,
    // b:1:1:1 and b:1:2:1.
    const auto& e1 = example_measure("e1");
    const auto t1 = Truncation::make(e1.graph, 4);
    const auto m1 = truncated_matrix(e1, nullptr, t1);
    const auto col = static_cast<std::size_t>(t1.index_of(VertexId::circuit(1)));
    std::vector<VertexId> hits;
    for (std::size_t row = 0; row < m1.size(); ++row)
        if (m1.at(row, col) != 0) hits.push_back(t1.vertices[row]);
    CHECK(hits == std::vector<VertexId>{VertexId::circuit(2),
                                        VertexId::branch(1, 1, 1),
                                        VertexId::branch(1, 2, 1)});

    // All-zero weight gives the zero matrix.
    WeightSpec zero = WeightSpec::ones(tiny.graph);
    zero.circuit_pi[0] = q("0");
    zero.branch_pi[{1, 1}] = WeightSpec::BranchWeight{{}, q("0")};
    CHECK(count_nonzero(truncated_matrix(tiny, &zero, t)) == 0);
}

TEST_CASE("defect_quadratic_form on the examples") {
    const auto& e1 = example_measure("e1");
    const auto window6 = Truncation::make(e1.graph, 6);

    const auto zero2 = defect_quadratic_form(e1, nullptr, {1, 2}, window6);
    CHECK_FALSE(zero2.empty());
    for (const auto& [v, d] : zero2) CHECK(d == 0);

    const auto quasi1 = defect_quadratic_form(e1, nullptr, {1, 1}, window6);
    CHECK(quasi1.at(VertexId::circuit(2)) == q("-2"));

    const auto& e2 = example_measure("e2");
    const auto zeroq2 = defect_quadratic_form(e2, nullptr, {2, 2},
                                              Truncation::make(e2.graph, 8));
    CHECK_FALSE(zeroq2.empty());
    for (const auto& [v, d] : zeroq2) CHECK(d == 0);

    CHECK_THROWS_AS(
        defect_quadratic_form(e1, nullptr, {1, 2}, Truncation::make(e1.graph, 4)),
        std::invalid_argument);
}

TEST_CASE("matrix powers stay mutually orthogonal") {
    // Columns of M^p are supported on disjoint preimage atoms, so the
    // mu-inner product of two distinct columns vanishes.
    std::mt19937 rng(84);
    for (int trial = 0; trial < 6; ++trial) {
        const auto spec = qmitest::random_measure_spec(rng, 3, 2);
        const auto t = Truncation::make(spec.graph, 7);
        const auto m = truncated_matrix(spec, nullptr, t);
        const std::size_t n = t.vertices.size();
        std::vector<std::vector<Rational>> cols;
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<Rational> f(n, Rational(0));
            f[c] = 1;
            for (long p = 0; p < 3; ++p) f = m.apply(f);
            cols.push_back(std::move(f));
        }
        // Only test interior columns: branch position + steps inside window.
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const VertexId& va = t.vertices[a];
                const VertexId& vb = t.vertices[b];
                if ((!va.is_circuit() && va.j + 3 > t.depth) ||
                    (!vb.is_circuit() && vb.j + 3 > t.depth))
                    continue;
                Rational inner = 0;
                for (std::size_t row = 0; row < n; ++row)
                    inner += cols[a][row] * cols[b][row] * mu(spec, t.vertices[row]);
                CHECK(inner == 0);
            }
    }
}

TEST_CASE("quadratic form matches the closed-form defects") {
    std::mt19937 rng(85);
    for (int trial = 0; trial < 6; ++trial) {
        const auto spec = qmitest::random_measure_spec(rng, 3, 2);
        const auto w = qmitest::random_weight_spec(rng, spec.graph);
        const DefectQuery query{qmitest::pick(rng, 0, 2), qmitest::pick(rng, 1, 3)};
        const auto t = Truncation::make(spec.graph, query.k + query.m + 4);
        for (const WeightSpec* wp : {static_cast<const WeightSpec*>(nullptr), &w}) {
            const auto defects = defect_quadratic_form(spec, wp, query, t);
            CHECK_FALSE(defects.empty());
            for (const auto& [v, d] : defects)
                CHECK(d == vertex_defect(spec, wp, query, v));
        }
    }
}
