#ifndef QMI_CLASSIFIER_HPP
#define QMI_CLASSIFIER_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmi/derivatives.hpp"

namespace qmi {

/// The two parameters of "k-quasi-m-isometric".
struct DefectQuery {
    long k = 0;
    long m = 1;
};

enum class Criterion { PerVertex, TheoremForm, WeightedTheoremForm };

/// Raised when two internally equivalent criteria disagree; must never
/// happen on a valid spec.
struct InternalInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ClassificationReport {
    bool verdict = false;
    bool strict = false;
    std::vector<std::pair<int, Rational>> circuit_defects;  // (r, defect)
    // ((r, i), degree of the relevant shifted branch sequence); degree is
    // kZeroPolyDegree for the zero sequence, kNotPolynomial when the
    // sequence is not a polynomial at all.
    std::vector<std::pair<std::pair<int, int>, int>> branch_degrees;
    // Weighted classification only: whether the full per-branch-vertex
    // defect vanishes for every position along the branch.
    std::vector<std::pair<std::pair<int, int>, bool>> branch_defects_vanish;
    Criterion criterion_used = Criterion::PerVertex;
    bool oracle_checked = false;
    std::vector<std::string> notes;
};

/// Alternating binomial sum of h_k(x_r), ..., h_{k+m}(x_r).
Rational defect_circuit(const MeasureSpec& spec, const DefectQuery& q, int r);

/// True iff the defect sum vanishes at every vertex of branch (r, i),
/// i.e. the measure sequence shifted by k is a polynomial of degree <= m-1.
bool defect_branch_all(const MeasureSpec& spec, const DefectQuery& q, int r, int i);

/// Unweighted classifier. For m >= 2 decides via the branch-degree
/// criterion (degree <= m-2 plus vanishing circuit defects) and checks the
/// independent per-vertex criterion agrees; for m = 1 uses the per-vertex
/// criterion directly.
ClassificationReport classify_composition(const MeasureSpec& spec,
                                          const DefectQuery& q);

/// verdict(k, m) plus strictness: strict iff verdict holds at m but not
/// at m-1. Requires m >= 2.
ClassificationReport classify_strict(const MeasureSpec& spec, const DefectQuery& q);

/// k = 0 specialization; notes the single-branching-vertex case when only
/// the last circuit vertex carries branches. Requires m >= 2.
ClassificationReport classify_m_isometry(const MeasureSpec& spec, long m);

/// Weighted classifier: branch sequences pi_k^2 * mu must be polynomial of
/// degree <= m-1 (m >= 2 path), every per-branch-vertex weighted defect
/// must vanish, and the weighted circuit defects must all be zero.
ClassificationReport classify_weighted(const MeasureSpec& spec, const WeightSpec& w,
                                       const DefectQuery& q);

/// Closed-form defect sum at one vertex: the alternating binomial sum of
/// h_{p+k}(v) (or h_{p+k} F_{p+k}(v) when a weight is given) for p = 0..m.
Rational vertex_defect(const MeasureSpec& spec, const WeightSpec* w,
                       const DefectQuery& q, const VertexId& v);

/// Rendering helper for degree markers: "-inf", "not-polynomial", or the
/// integer degree.
std::string degree_to_string(int degree);

}  // namespace qmi

#endif
