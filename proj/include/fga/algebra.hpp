#ifndef FGA_ALGEBRA_HPP
#define FGA_ALGEBRA_HPP

// The arithmetic: concatenation (oplus), edge substitution (otimes),
// and scalar multiple / power.  Both operations are implemented on labeled
// graphs with deterministic relabeling so results are byte-reproducible;
// equality elsewhere always means flow-graph isomorphism.

#include <utility>
#include <vector>

#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"
#include "fga/isomorphism.hpp"

namespace fga {

// --- oplus -----------------------------------------------------------------

struct SumResult {
    FlowGraph sum;
    VertexMap left_map;   // A into A+B
    VertexMap right_map;  // B into A+B
};

// Glue t_A to s_B.  Labels: A's vertices keep their labels, B's vertices
// follow (with s_B collapsing onto t_A); edges are A's then B's.
inline SumResult oplus(const FlowGraph& a, const FlowGraph& b) {
    SumResult r;
    std::vector<int> bmap(b.vertex_count);
    int next = a.vertex_count;
    for (int v = 0; v < b.vertex_count; ++v)
        bmap[v] = (v == b.source) ? a.target : next++;

    std::vector<Edge> edges = a.edges;
    edges.reserve(a.edges.size() + b.edges.size());
    for (const Edge& e : b.edges) edges.push_back(Edge{bmap[e.tail], bmap[e.head]});

    r.sum = FlowGraph{next, std::move(edges), a.source, bmap[b.target]};

    r.left_map.vertex_map.resize(a.vertex_count);
    for (int v = 0; v < a.vertex_count; ++v) r.left_map.vertex_map[v] = v;
    r.left_map.edge_map.resize(a.edges.size());
    for (int i = 0; i < a.q(); ++i) r.left_map.edge_map[i] = i;

    r.right_map.vertex_map = std::move(bmap);
    r.right_map.edge_map.resize(b.edges.size());
    for (int i = 0; i < b.q(); ++i) r.right_map.edge_map[i] = a.q() + i;
    return r;
}

inline FlowGraph oplus_graph(const FlowGraph& a, const FlowGraph& b) {
    return oplus(a, b).sum;
}

// --- otimes ----------------------------------------------------------------

struct ProductResult {
    FlowGraph product;
    // Lambda_{A,B}: product edge id -> (edge id of A, edge id of B).
    std::vector<std::pair<int, int>> edge_bijection;
    // Image of each A vertex in the product.
    std::vector<int> a_vertex_image;
    // Image of each B vertex in the copy substituted for A's edge i.
    std::vector<std::vector<int>> copy_vertex_image;
};

namespace detail {

// Token space for the product gluing: A's vertices come first, then the
// vertices of the B copy substituted for each A edge.
inline int copy_token(const FlowGraph& a, const FlowGraph& b, int a_edge, int b_vertex) {
    return a.vertex_count + a_edge * b.vertex_count + b_vertex;
}

}  // namespace detail

// Replace every edge (u,v) of A with a fresh copy of B, identifying u with
// the copy's source and v with the copy's target.  `eta` is the edge
// enumeration (a permutation of A's edge ids) used for the staged gluing;
// the gluing relation it generates is enumeration-independent, and labels
// are normalized by smallest token, so the labeled result is too.  Product
// edges are emitted by (A edge id, B edge id) ascending.
inline ProductResult otimes_with_eta(const FlowGraph& a, const FlowGraph& b,
                                     const std::vector<int>& eta) {
    const int tokens = a.vertex_count + a.q() * b.vertex_count;
    Dsu dsu(tokens);
    for (int e : eta) {
        dsu.unite(a.edges[e].tail, detail::copy_token(a, b, e, b.source));
        dsu.unite(a.edges[e].head, detail::copy_token(a, b, e, b.target));
    }

    // Only tokens that survive the substitution are vertices: A's vertices
    // survive exactly when A has no edges (otherwise every A vertex is glued
    // into copies), and copy tokens always survive.  Gluing makes every
    // class contain at least one surviving token whenever q_A > 0.
    std::vector<int> label(tokens, -1);
    int next = 0;
    if (a.q() == 0) {
        // No edges to substitute: the product is A itself (the trivial graph).
        ProductResult r;
        r.product = a;
        r.a_vertex_image.resize(a.vertex_count);
        for (int v = 0; v < a.vertex_count; ++v) r.a_vertex_image[v] = v;
        return r;
    }
    for (int t = 0; t < tokens; ++t) {
        const int root = dsu.find(t);
        if (label[root] == -1) label[root] = next++;
    }

    ProductResult r;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(a.q()) * b.q());
    r.edge_bijection.reserve(edges.capacity());
    for (int e = 0; e < a.q(); ++e) {
        for (int f = 0; f < b.q(); ++f) {
            const int u = label[dsu.find(detail::copy_token(a, b, e, b.edges[f].tail))];
            const int v = label[dsu.find(detail::copy_token(a, b, e, b.edges[f].head))];
            edges.push_back(Edge{u, v});
            r.edge_bijection.emplace_back(e, f);
        }
    }
    r.product = FlowGraph{next, std::move(edges), label[dsu.find(a.source)],
                          label[dsu.find(a.target)]};
    r.a_vertex_image.resize(a.vertex_count);
    for (int v = 0; v < a.vertex_count; ++v) r.a_vertex_image[v] = label[dsu.find(v)];
    r.copy_vertex_image.assign(a.q(), std::vector<int>(b.vertex_count));
    for (int e = 0; e < a.q(); ++e)
        for (int w = 0; w < b.vertex_count; ++w)
            r.copy_vertex_image[e][w] = label[dsu.find(detail::copy_token(a, b, e, w))];
    return r;
}

inline ProductResult otimes(const FlowGraph& a, const FlowGraph& b) {
    std::vector<int> eta(a.q());
    for (int i = 0; i < a.q(); ++i) eta[i] = i;
    return otimes_with_eta(a, b, eta);
}

inline FlowGraph otimes_graph(const FlowGraph& a, const FlowGraph& b) {
    return otimes(a, b).product;
}

// --- scalar operations -----------------------------------------------------

// kA = (k-1)A + A, defined for positive k only.
inline FlowGraph scalar_multiple(int k, const FlowGraph& a) {
    if (k < 1) throw DomainError("scalar_multiple requires k >= 1");
    FlowGraph acc = a;
    for (int i = 1; i < k; ++i) acc = oplus_graph(acc, a);
    return acc;
}

// A^k = A^(k-1) * A, defined for positive k only.
inline FlowGraph scalar_power(const FlowGraph& a, int k) {
    if (k < 1) throw DomainError("scalar_power requires k >= 1");
    FlowGraph acc = a;
    for (int i = 1; i < k; ++i) acc = otimes_graph(acc, a);
    return acc;
}

// Expected vertex count of A*B per the counting remark.
inline int otimes_expected_vertices(const FlowGraph& a, const FlowGraph& b) {
    if (is_trivial(b) || is_infinitesimal(b)) return 1 + a.q() * (b.p() - 1);
    return a.p() + a.q() * (b.p() - 2);
}

// --- units of otimes -------------------------------------------------------
//
// Two one-edge flow graphs are invertible under otimes: F1 and the
// anchor-reversed single edge R1 (s at the head, t at the tail), with
// R1*R1 = F1.  R1*A swaps A's anchors and A*R1 reverses every edge of A,
// so statements about unique identities and about primality are phrased
// modulo this unit group {F1, R1}.

inline FlowGraph r1() { return make_flow_graph(2, {Edge{0, 1}}, 1, 0); }

inline bool is_otimes_unit(const FlowGraph& a) {
    return a.vertex_count == 2 && a.q() == 1 && a.edges[0].tail != a.edges[0].head &&
           a.source != a.target;
}

}  // namespace fga

#endif  // FGA_ALGEBRA_HPP
