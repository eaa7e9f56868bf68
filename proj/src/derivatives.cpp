#include "qmi/derivatives.hpp"

#include <stdexcept>
#include <vector>

namespace qmi {

namespace {

// Circuit-vertex atom sums written directly from the closed-form display:
// the circuit vertex phi2(p+r), plus for each j in 1..p the branches of the
// unique residue class s with phi2(p+r) == phi2(s+j). Deliberately not
// implemented via preimage enumeration; the oracle module owns that path.
struct CircuitAtomSums {
    Rational plain;     // sum of mu over the atom
    Rational weighted;  // sum of pi_p^2 * mu over the atom
};

CircuitAtomSums circuit_atom_sums(const MeasureSpec& spec, const WeightSpec* w,
                                  int r, long p) {
    const GraphSpec& g = spec.graph;
    const int top = phi2(p + r, g.kappa);
    CircuitAtomSums sums;
    const Rational mu_top = mu(spec, VertexId::circuit(top));
    sums.plain = mu_top;
    if (w) {
        const Rational wp = weight_product(*w, VertexId::circuit(top), p);
        sums.weighted = wp * wp * mu_top;
    }
    for (long j = 1; j <= p; ++j) {
        for (int s = 1; s <= g.kappa; ++s) {
            if (phi2(s + j, g.kappa) != top) continue;
            for (int i = 1; i <= g.branches_at(s); ++i) {
                const VertexId y = VertexId::branch(s, i, j);
                const Rational mu_y = mu(spec, y);
                sums.plain += mu_y;
                if (w) {
                    const Rational wp = weight_product(*w, y, p);
                    sums.weighted += wp * wp * mu_y;
                }
            }
        }
    }
    return sums;
}

}  // namespace

Rational radon_nikodym(const MeasureSpec& spec, const VertexId& v, long p) {
    check_vertex(spec.graph, v);
    if (p < 0) throw std::domain_error("derivative order must be >= 0");
    if (p == 0) return 1;
    if (!v.is_circuit()) {
        const auto& seq = spec.branch(v.r, v.i);
        return seq.at(v.j + p) / seq.at(v.j);
    }
    return circuit_atom_sums(spec, nullptr, v.r, p).plain / mu(spec, v);
}

Rational weight_product(const WeightSpec& w, const VertexId& v, long k) {
    check_vertex(w.graph, v);
    if (k < 0) throw std::domain_error("weight product length must be >= 0");
    Rational product = 1;
    VertexId x = v;
    for (long t = 0; t < k; ++t) {
        product *= pi(w, x);
        x = parent(w.graph, x);
    }
    return product;
}

Rational expectation_factor(const MeasureSpec& spec, const WeightSpec& w,
                            const VertexId& v, long p) {
    check_vertex(spec.graph, v);
    if (p < 0) throw std::domain_error("expectation order must be >= 0");
    if (p == 0) return 1;
    if (!v.is_circuit()) {
        const Rational wp = weight_product(w, VertexId::branch(v.r, v.i, v.j + p), p);
        return wp * wp;
    }
    const CircuitAtomSums sums = circuit_atom_sums(spec, &w, v.r, p);
    return sums.weighted / sums.plain;
}

Rational weighted_gram(const MeasureSpec& spec, const WeightSpec& w,
                       const VertexId& v, long p) {
    if (p == 0) return 1;
    return radon_nikodym(spec, v, p) * expectation_factor(spec, w, v, p);
}

std::pair<Rational, Rational> mass_balance_sides(const MeasureSpec& spec, long k,
                                                 long m) {
    if (m < 1 || k < 0) throw std::domain_error("requires m >= 1 and k >= 0");
    const GraphSpec& g = spec.graph;

    Rational lhs = 0;
    for (int r = 1; r <= g.kappa; ++r) {
        std::vector<Rational> values;
        values.reserve(static_cast<std::size_t>(m + 1));
        for (long p = 0; p <= m; ++p)
            values.push_back(radon_nikodym(spec, VertexId::circuit(r), p + k));
        lhs += mu(spec, VertexId::circuit(r)) * alt_binomial_sum(values);
    }

    Rational rhs = 0;
    for (int r = 1; r <= g.kappa; ++r) {
        for (int i = 1; i <= g.branches_at(r); ++i) {
            std::vector<Rational> values;
            values.reserve(static_cast<std::size_t>(m));
            for (long p = 0; p <= m - 1; ++p)
                values.push_back(mu(spec, VertexId::branch(r, i, p + k + 1)));
            rhs += alt_binomial_sum(values);
        }
    }
    return {lhs, -rhs};
}

}  // namespace qmi
