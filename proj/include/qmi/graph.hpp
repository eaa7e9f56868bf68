#ifndef QMI_GRAPH_HPP
#define QMI_GRAPH_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmi {

/// The one-circuit directed graph: a cycle of kappa vertices, with eta[r-1]
/// infinite branches feeding into circuit vertex r.
struct GraphSpec {
    int kappa = 1;
    std::vector<int> eta;

    /// Throws std::invalid_argument unless kappa >= 1, eta has kappa
    /// nonnegative entries, and at least one entry is positive.
    void check() const;

    int branches_at(int r) const { return eta[static_cast<std::size_t>(r - 1)]; }

    bool operator==(const GraphSpec&) const = default;
};

/// Circuit vertex x_r or branch vertex x^r_{i,j}. Circuit vertices order
/// before branch vertices, then lexicographically.
struct VertexId {
    enum class Kind { Circuit, Branch };
    Kind kind = Kind::Circuit;
    int r = 1;
    int i = 0;   // branch number, 0 for circuit vertices
    long j = 0;  // position along the branch, 0 for circuit vertices

    static VertexId circuit(int r) { return {Kind::Circuit, r, 0, 0}; }
    static VertexId branch(int r, int i, long j) { return {Kind::Branch, r, i, j}; }

    bool is_circuit() const { return kind == Kind::Circuit; }

    /// "c:r" or "b:r:i:j"; decode() round-trips exactly.
    std::string encode() const;
    static VertexId decode(std::string_view text);

    auto operator<=>(const VertexId&) const = default;
};

/// Unique r in {1,...,kappa} with p congruent to r mod kappa.
int phi2(long p, int kappa);

/// Integer quotient with p = phi1 * kappa + phi2.
long phi1(long p, int kappa);

/// Throws std::domain_error if v does not belong to the graph.
void check_vertex(const GraphSpec& g, const VertexId& v);

/// One step of the parent map: branch vertices walk toward their circuit
/// vertex, the circuit rotates x_t -> x_{t-1} (x_1 -> x_kappa).
VertexId parent(const GraphSpec& g, const VertexId& v);

/// Closed-form p-fold parent, p >= 0.
VertexId iterate(const GraphSpec& g, const VertexId& v, long p);

/// All y with iterate(y, p) == v, in canonical order. p >= 1.
std::vector<VertexId> preimage(const GraphSpec& g, const VertexId& v, long p);

/// The kappa residue classes A_r = {(s, j) : s in J_kappa, j in J_{p+k},
/// phi2(p+k+r) == phi2(s+j)}; a partition of J_kappa x J_{p+k}.
std::vector<std::vector<std::pair<int, long>>> partition_indices(int kappa, long p,
                                                                 long k);

}  // namespace qmi

#endif
