#include "qmi/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmi {

Truncation Truncation::make(const GraphSpec& g, long depth) {
    if (depth < 1) throw std::invalid_argument("truncation depth must be >= 1");
    Truncation t;
    t.depth = depth;
    for (int r = 1; r <= g.kappa; ++r) t.vertices.push_back(VertexId::circuit(r));
    for (int r = 1; r <= g.kappa; ++r)
        for (int i = 1; i <= g.branches_at(r); ++i)
            for (long j = 1; j <= depth; ++j)
                t.vertices.push_back(VertexId::branch(r, i, j));
    std::sort(t.vertices.begin(), t.vertices.end());
    return t;
}

long Truncation::index_of(const VertexId& v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return it - vertices.begin();
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(n_, Rational(0));
    for (std::size_t row = 0; row < n_; ++row)
        for (std::size_t col = 0; col < n_; ++col) {
            const Rational& a = data_[row * n_ + col];
            if (a != 0 && v[col] != 0) out[row] += a * v[col];
        }
    return out;
}

Rational h_oracle(const MeasureSpec& spec, const VertexId& v, long p) {
    if (p < 0) throw std::domain_error("derivative order must be >= 0");
    if (p == 0) return 1;
    const auto atom = preimage(spec.graph, v, p);
    return mu_sum(spec, atom) / mu(spec, v);
}

Rational wgram_oracle(const MeasureSpec& spec, const WeightSpec& w, const VertexId& v,
                      long p) {
    if (p < 0) throw std::domain_error("order must be >= 0");
    if (p == 0) return 1;
    Rational sum = 0;
    for (const auto& y : preimage(spec.graph, v, p)) {
        const Rational wp = weight_product(w, y, p);
        sum += wp * wp * mu(spec, y);
    }
    return sum / mu(spec, v);
}

RationalMatrix truncated_matrix(const MeasureSpec& spec, const WeightSpec* w,
                                const Truncation& t) {
    RationalMatrix m(t.vertices.size());
    for (std::size_t row = 0; row < t.vertices.size(); ++row) {
        const VertexId& y = t.vertices[row];
        const VertexId target = parent(spec.graph, y);
        const long col = t.index_of(target);
        if (col < 0) continue;  // cannot happen: parents stay in the window
        m.at(row, static_cast<std::size_t>(col)) = w ? pi(*w, y) : Rational(1);
    }
    return m;
}

std::map<VertexId, Rational> defect_quadratic_form(const MeasureSpec& spec,
                                                   const WeightSpec* w,
                                                   const DefectQuery& q,
                                                   const Truncation& t) {
    if (t.depth < q.k + q.m + 2)
        throw std::invalid_argument("truncation window too shallow; need depth >= " +
                                    std::to_string(q.k + q.m + 2));
    const RationalMatrix m = truncated_matrix(spec, w, t);
    const std::size_t n = t.vertices.size();

    std::vector<Rational> atom_mu;
    atom_mu.reserve(n);
    for (const auto& v : t.vertices) atom_mu.push_back(mu(spec, v));

    std::map<VertexId, Rational> defects;
    for (std::size_t col = 0; col < n; ++col) {
        const VertexId& v = t.vertices[col];
        if (!v.is_circuit() && v.j + q.k + q.m > t.depth) continue;
        std::vector<Rational> f(n, Rational(0));
        f[col] = 1;
        Rational defect = 0;
        for (long step = 0; step <= q.k + q.m; ++step) {
            if (step > 0) f = m.apply(f);
            const long p = step - q.k;
            if (p < 0) continue;
            Rational norm_sq = 0;
            for (std::size_t row = 0; row < n; ++row)
                if (f[row] != 0) norm_sq += f[row] * f[row] * atom_mu[row];
            const Rational term = Rational(binomial(q.m, p)) * norm_sq;
            defect += (p % 2 == 0) ? term : -term;
        }
        defects[v] = defect / atom_mu[col];
    }
    return defects;
}

}  // namespace qmi
