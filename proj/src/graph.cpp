#include "qmi/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qmi {

void GraphSpec::check() const {
    if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
    if (static_cast<int>(eta.size()) != kappa)
        throw std::invalid_argument("eta must have exactly kappa entries");
    bool any = false;
    for (int e : eta) {
        if (e < 0) throw std::invalid_argument("branch counts must be >= 0");
        if (e > 0) any = true;
    }
    if (!any) throw std::invalid_argument("at least one branch count must be positive");
}

std::string VertexId::encode() const {
    if (is_circuit()) return "c:" + std::to_string(r);
    return "b:" + std::to_string(r) + ":" + std::to_string(i) + ":" + std::to_string(j);
}

namespace {

long parse_field(std::string_view text) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad vertex field: " + std::string(text));
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

VertexId VertexId::decode(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() == 2 && parts[0] == "c") {
        const long r = parse_field(parts[1]);
        if (r >= 1) return circuit(static_cast<int>(r));
    } else if (parts.size() == 4 && parts[0] == "b") {
        const long r = parse_field(parts[1]);
        const long i = parse_field(parts[2]);
        const long j = parse_field(parts[3]);
        if (r >= 1 && i >= 1 && j >= 1)
            return branch(static_cast<int>(r), static_cast<int>(i), j);
    }
    throw std::invalid_argument("bad vertex encoding: " + std::string(text));
}

int phi2(long p, int kappa) {
    if (kappa < 1) throw std::domain_error("kappa must be >= 1");
    const long m = ((p - 1) % kappa + kappa) % kappa;
    return static_cast<int>(m) + 1;
}

long phi1(long p, int kappa) {
    return (p - phi2(p, kappa)) / kappa;
}

void check_vertex(const GraphSpec& g, const VertexId& v) {
    if (v.r < 1 || v.r > g.kappa) throw std::domain_error("vertex circuit index out of range");
    if (v.is_circuit()) {
        if (v.i != 0 || v.j != 0) throw std::domain_error("malformed circuit vertex");
        return;
    }
    if (v.i < 1 || v.i > g.branches_at(v.r))
        throw std::domain_error("branch number out of range at " + v.encode());
    if (v.j < 1) throw std::domain_error("branch position must be >= 1");
}

VertexId parent(const GraphSpec& g, const VertexId& v) {
    check_vertex(g, v);
    if (!v.is_circuit())
        return v.j > 1 ? VertexId::branch(v.r, v.i, v.j - 1) : VertexId::circuit(v.r);
    return VertexId::circuit(phi2(v.r - 1, g.kappa));
}

VertexId iterate(const GraphSpec& g, const VertexId& v, long p) {
    check_vertex(g, v);
    if (p < 0) throw std::domain_error("iterate order must be >= 0");
    if (v.is_circuit()) return VertexId::circuit(phi2(v.r - p, g.kappa));
    if (v.j > p) return VertexId::branch(v.r, v.i, v.j - p);
    return VertexId::circuit(phi2(v.r + v.j - p, g.kappa));
}

std::vector<VertexId> preimage(const GraphSpec& g, const VertexId& v, long p) {
    check_vertex(g, v);
    if (p < 1) throw std::domain_error("preimage order must be >= 1");
    if (!v.is_circuit()) return {VertexId::branch(v.r, v.i, v.j + p)};
    std::vector<VertexId> out;
    out.push_back(VertexId::circuit(phi2(p + v.r, g.kappa)));
    for (long j = 1; j <= p; ++j) {
        const int s = phi2(p + v.r - j, g.kappa);
        for (int i = 1; i <= g.branches_at(s); ++i)
            out.push_back(VertexId::branch(s, i, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::pair<int, long>>> partition_indices(int kappa, long p,
                                                                 long k) {
    if (kappa < 1 || p < 1 || k < 0)
        throw std::domain_error("partition_indices requires kappa, p >= 1 and k >= 0");
    std::vector<std::vector<std::pair<int, long>>> classes(
        static_cast<std::size_t>(kappa));
    for (int r = 1; r <= kappa; ++r) {
        const int target = phi2(p + k + r, kappa);
        for (int s = 1; s <= kappa; ++s)
            for (long j = 1; j <= p + k; ++j)
                if (phi2(s + j, kappa) == target)
                    classes[static_cast<std::size_t>(r - 1)].emplace_back(s, j);
    }
    return classes;
}

}  // namespace qmi
