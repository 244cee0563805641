#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "tldp/fan.hpp"

namespace tldp {

/// Circular graph of a complete fan: vertex i carries -r_i, the edge from
/// vertex i to vertex i+1 carries the double weight (p_i, q_i).
struct Wve2cGraph {
    std::vector<Int> vertex_weights;
    std::vector<ConePQ> edge_weights;

    std::size_t size() const { return vertex_weights.size(); }
    friend bool operator==(const Wve2cGraph& a, const Wve2cGraph& b) {
        return a.vertex_weights == b.vertex_weights && a.edge_weights == b.edge_weights;
    }
};

inline Wve2cGraph graph_of(const CompleteFan& fan, const std::vector<Int>& r) {
    if (r.size() != fan.nu())
        throw std::invalid_argument("graph_of: weight list does not match fan size");
    Wve2cGraph g;
    g.vertex_weights.reserve(fan.nu());
    g.edge_weights.reserve(fan.nu());
    for (std::size_t i = 0; i < fan.nu(); ++i) {
        g.vertex_weights.push_back(-r[i]);
        g.edge_weights.push_back(fan.cone(i).pq);
    }
    return g;
}

inline Wve2cGraph graph_of(const CompleteFan& fan) { return graph_of(fan, r_invariants(fan)); }

/// Orientation reversal: the cyclic order is reversed and every edge weight
/// (p,q) becomes (p^,q).
inline Wve2cGraph reverse_graph(const Wve2cGraph& g) {
    const std::size_t n = g.size();
    Wve2cGraph rev;
    rev.vertex_weights.resize(n);
    rev.edge_weights.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        rev.vertex_weights[k] = g.vertex_weights[(n - k) % n];
        const ConePQ& e = g.edge_weights[(2 * n - k - 1) % n];
        rev.edge_weights[k] = ConePQ{socius(e), e.q};
    }
    return rev;
}

/// Totally ordered key realizing graph isomorphism: equal keys iff the
/// graphs agree up to rotation, directly or after reversal.
using CanonicalKey = std::vector<Int>;

namespace detail {

inline CanonicalKey flatten_rotation(const Wve2cGraph& g, std::size_t start) {
    const std::size_t n = g.size();
    CanonicalKey seq;
    seq.reserve(3 * n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t i = (start + j) % n;
        seq.push_back(g.vertex_weights[i]);
        seq.push_back(g.edge_weights[i].p);
        seq.push_back(g.edge_weights[i].q);
    }
    return seq;
}

}  // namespace detail

/// Lexicographic minimum of the flattened (vertex, edge) sequence over all
/// rotations of the graph and of its reverse.  nu <= 13 here, so the
/// quadratic minimum is cheap and obviously exhaustive.
inline CanonicalKey canonical_key(const Wve2cGraph& g) {
    CanonicalKey best = detail::flatten_rotation(g, 0);
    for (std::size_t k = 1; k < g.size(); ++k) {
        CanonicalKey cand = detail::flatten_rotation(g, k);
        if (cand < best) best = cand;
    }
    Wve2cGraph rev = reverse_graph(g);
    for (std::size_t k = 0; k < rev.size(); ++k) {
        CanonicalKey cand = detail::flatten_rotation(rev, k);
        if (cand < best) best = cand;
    }
    return best;
}

inline bool isomorphic(const Wve2cGraph& g1, const Wve2cGraph& g2) {
    return canonical_key(g1) == canonical_key(g2);
}

/// DOT rendering on a circular layout.  Vertices show -r_i; edges show
/// "(p,q)", omitted for the trivial double weight (0,1).
inline std::string to_dot(const Wve2cGraph& g) {
    std::ostringstream os;
    os << "graph wve2c {\n  layout=circo;\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        os << "  v" << i << " [label=\"" << g.vertex_weights[i] << "\"];\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const ConePQ& e = g.edge_weights[i];
        os << "  v" << i << " -- v" << (i + 1) % g.size();
        if (!(e.p == 0 && e.q == 1))
            os << " [label=\"(" << e.p << "," << e.q << ")\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace tldp
