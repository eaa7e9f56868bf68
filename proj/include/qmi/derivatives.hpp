#ifndef QMI_DERIVATIVES_HPP
#define QMI_DERIVATIVES_HPP

#include <utility>

#include "qmi/space.hpp"

namespace qmi {

/// Radon-Nikodym derivative h_p(v) of mu after p parent steps, from the
/// closed form: branch vertices take the ratio mu(j+p)/mu(j), circuit
/// vertices sum the circuit vertex p steps up plus every branch segment
/// that feeds into v within p steps, normalized by mu(v). h_0 = 1.
Rational radon_nikodym(const MeasureSpec& spec, const VertexId& v, long p);

/// Product of the weight along the k-step parent walk starting at v:
/// pi(v) pi(phi(v)) ... pi(phi^{k-1}(v)). Empty product (k = 0) is 1.
Rational weight_product(const WeightSpec& w, const VertexId& v, long k);

/// The factor F_p with E_p(pi_p^2) = F_p o phi^p: on a branch vertex the
/// squared weight product at the unique p-step preimage, on a circuit
/// vertex the mu-weighted average of squared weight products over the
/// p-step preimage atom, both from the closed-form index sums. F_0 = 1.
Rational expectation_factor(const MeasureSpec& spec, const WeightSpec& w,
                            const VertexId& v, long p);

/// Diagonal entry of W^{*p} W^p at the indicator of v: h_p(v) F_p(v).
Rational weighted_gram(const MeasureSpec& spec, const WeightSpec& w,
                       const VertexId& v, long p);

/// Both sides of the circuit/branch mass-balance identity: the mu-weighted
/// alternating sum of h_{p+k} over circuit vertices on the left, minus the
/// alternating sum of branch measures mu(x^r_{i,p+k+1}) on the right.
/// Equal for every valid spec.
std::pair<Rational, Rational> mass_balance_sides(const MeasureSpec& spec, long k,
                                                 long m);

}  // namespace qmi

#endif
