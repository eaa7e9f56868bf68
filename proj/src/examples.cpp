#include "qmi/examples.hpp"

#include <stdexcept>

namespace qmi {

namespace {

EventuallyPolynomialSeq seq(std::vector<std::string> prefix,
                            std::vector<std::string> tail_coeffs) {
    std::vector<Rational> p;
    for (const auto& s : prefix) p.push_back(parse_rational(s));
    std::vector<Rational> t;
    for (const auto& s : tail_coeffs) t.push_back(parse_rational(s));
    return EventuallyPolynomialSeq(std::move(p), Polynomial(std::move(t)));
}

BuiltinExample make_e1() {
    BuiltinExample e;
    e.id = "e1";
    e.spec.measure.graph = {3, {2, 0, 0}};
    e.spec.measure.circuit_mu = {parse_rational("5/3"), parse_rational("1/3"),
                                 parse_rational("1")};
    e.spec.measure.branch_mu[{1, 1}] = seq({"1"}, {"1"});
    e.spec.measure.branch_mu[{1, 2}] = seq({"1"}, {"1"});
    e.spec.k = 1;
    e.spec.m = 2;
    e.claim = "C is a quasi-2-isometry (k=1, m=2)";
    e.claimed_verdict = true;
    return e;
}

BuiltinExample make_e2() {
    BuiltinExample e;
    e.id = "e2";
    e.spec.measure.graph = {3, {2, 1, 0}};
    e.spec.measure.circuit_mu = {parse_rational("2"), parse_rational("1"),
                                 parse_rational("1")};
    e.spec.measure.branch_mu[{1, 1}] = seq({"1", "1"}, {"1"});
    e.spec.measure.branch_mu[{1, 2}] = seq({"1", "1"}, {"1"});
    e.spec.measure.branch_mu[{2, 1}] = seq({"1", "1"}, {"1"});
    e.spec.k = 2;
    e.spec.m = 2;
    e.claim = "C is a 2-quasi-2-isometry (k=2, m=2)";
    e.claimed_verdict = true;
    return e;
}

BuiltinExample make_e3() {
    BuiltinExample e;
    e.id = "e3";
    e.spec.measure.graph = {3, {2, 0, 0}};
    e.spec.measure.circuit_mu = {parse_rational("31/32"), parse_rational("11/12"),
                                 parse_rational("1")};
    // Positions j >= 2 carry measure 4 so that the squared branch weight
    // (1/2)^2 times the measure equals 1, as the source data prescribes.
    e.spec.measure.branch_mu[{1, 1}] = seq({"1"}, {"4"});
    e.spec.measure.branch_mu[{1, 2}] = seq({"1/3"}, {"4"});
    WeightSpec w;
    w.graph = e.spec.measure.graph;
    w.circuit_pi = {parse_rational("1"), parse_rational("1"), parse_rational("1")};
    w.branch_pi[{1, 1}] = {{}, parse_rational("1/2")};
    w.branch_pi[{1, 2}] = {{}, parse_rational("1/2")};
    e.spec.weight = std::move(w);
    e.spec.k = 1;
    e.spec.m = 2;
    e.claim = "W is a quasi-2-isometry (k=1, m=2, weighted)";
    e.claimed_verdict = true;
    return e;
}

}  // namespace

const std::vector<BuiltinExample>& builtin_examples() {
    static const std::vector<BuiltinExample> examples = {make_e1(), make_e2(),
                                                         make_e3()};
    return examples;
}

const BuiltinExample& builtin_example(const std::string& id) {
    for (const auto& e : builtin_examples())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown example id: " + id);
}

}  // namespace qmi
