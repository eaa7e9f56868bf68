#ifndef QMI_ORACLE_HPP
#define QMI_ORACLE_HPP

#include <map>
#include <optional>

#include "qmi/classifier.hpp"

namespace qmi {

/// Finite window: every circuit vertex plus every branch vertex with
/// position <= depth, in canonical order.
struct Truncation {
    long depth = 0;
    std::vector<VertexId> vertices;

    static Truncation make(const GraphSpec& g, long depth);

    /// Index of v in the window, or -1 when outside.
    long index_of(const VertexId& v) const;
};

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
  public:
    explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}

    std::size_t size() const { return n_; }
    Rational& at(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    const Rational& at(std::size_t row, std::size_t col) const {
        return data_[row * n_ + col];
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

  private:
    std::size_t n_;
    std::vector<Rational> data_;
};

/// Brute-force h_p(v): enumerate the p-step preimage and sum its measure.
/// Shares no summation code with the closed-form path.
Rational h_oracle(const MeasureSpec& spec, const VertexId& v, long p);

/// Brute-force diagonal of W^{*p}W^p: weighted preimage sum
/// sum_{y in phi^{-p}(v)} pi_p(y)^2 mu(y) / mu(v).
Rational wgram_oracle(const MeasureSpec& spec, const WeightSpec& w, const VertexId& v,
                      long p);

/// Matrix of W (or C when w is null) on the window, in the unnormalized
/// indicator basis: entry (y, v) is pi(y) when parent(y) == v.
RationalMatrix truncated_matrix(const MeasureSpec& spec, const WeightSpec* w,
                                const Truncation& t);

/// The defect quadratic form sum_p (-1)^p C(m,p) ||M^{p+k} e_v||^2_mu / mu(v)
/// at every interior vertex of the window (branch positions j with
/// j + k + m <= depth, plus all circuit vertices when depth >= k + m + 1).
/// Throws std::invalid_argument when the window is too shallow.
std::map<VertexId, Rational> defect_quadratic_form(const MeasureSpec& spec,
                                                   const WeightSpec* w,
                                                   const DefectQuery& q,
                                                   const Truncation& t);

}  // namespace qmi

#endif
