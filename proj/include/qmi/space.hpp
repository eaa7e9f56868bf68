#ifndef QMI_SPACE_HPP
#define QMI_SPACE_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmi/graph.hpp"
#include "qmi/sequence.hpp"

namespace qmi {

/// Atom measure mu over the graph: one positive rational per circuit
/// vertex, one eventually polynomial sequence per branch.
struct MeasureSpec {
    GraphSpec graph;
    std::vector<Rational> circuit_mu;
    std::map<std::pair<int, int>, EventuallyPolynomialSeq> branch_mu;

    const EventuallyPolynomialSeq& branch(int r, int i) const;

    bool operator==(const MeasureSpec&) const = default;
};

/// Weight function pi: rational per circuit vertex; along each branch a
/// finite prefix followed by a constant, so pi is bounded by construction.
struct WeightSpec {
    struct BranchWeight {
        std::vector<Rational> prefix;
        Rational tail_const;
        bool operator==(const BranchWeight&) const = default;
    };

    GraphSpec graph;
    std::vector<Rational> circuit_pi;
    std::map<std::pair<int, int>, BranchWeight> branch_pi;

    const BranchWeight& branch(int r, int i) const;

    /// Constant-one weight on the given graph.
    static WeightSpec ones(const GraphSpec& g);

    /// Structural consistency with the graph; throws std::invalid_argument.
    void check() const;

    bool operator==(const WeightSpec&) const = default;
};

Rational mu(const MeasureSpec& spec, const VertexId& v);
Rational mu_sum(const MeasureSpec& spec, std::span<const VertexId> vs);
Rational pi(const WeightSpec& spec, const VertexId& v);

struct ValidationReport {
    bool valid = false;
    std::vector<std::string> errors;
    Rational sup_h1;   // exact sup of mu(preimage(x))/mu(x), meaningful when valid
    long horizon = 0;  // last branch index inspected by the ratio analysis
};

/// Checks structural consistency, strict positivity of every atom (prefix
/// directly, polynomial tails via sign analysis past their root bound) and
/// computes the exact operator-norm bound sup h_1.
ValidationReport validate(const MeasureSpec& spec);

}  // namespace qmi

#endif
