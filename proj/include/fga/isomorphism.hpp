#ifndef FGA_ISOMORPHISM_HPP
#define FGA_ISOMORPHISM_HPP

// Multigraph embedding search (anchored backtracking), flow-graph
// isomorphism, and the exact canonical key.
//
// An embedding maps vertices injectively and edges injectively: k parallel
// edges only embed where at least k parallel edges exist.  Enumeration is
// per vertex assignment; the edge assignment is the canonical one (parallel
// edges matched in ascending id order on both sides).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"

namespace fga {

struct VertexMap {
    std::vector<int> vertex_map;  // domain vertex -> codomain vertex
    std::vector<int> edge_map;    // domain edge id -> codomain edge id
};

enum AnchorFlags : unsigned {
    AnchorNone = 0,
    AnchorSource = 1u,
    AnchorTarget = 2u,
    AnchorBoth = AnchorSource | AnchorTarget,
};

namespace detail {

// Dense directed multiplicity matrix; mult(u,v) = #edges u->v.
struct MultMatrix {
    int n = 0;
    std::vector<int> m;

    explicit MultMatrix(const FlowGraph& g) : n(g.vertex_count), m(static_cast<std::size_t>(n) * n, 0) {
        for (const Edge& e : g.edges) ++m[static_cast<std::size_t>(e.tail) * n + e.head];
    }

    int operator()(int u, int v) const { return m[static_cast<std::size_t>(u) * n + v]; }
};

// Vertex visit order for the backtracking search: anchors first, then a
// BFS over the undirected adjacency so every new vertex touches a mapped one.
inline std::vector<int> embedding_order(const FlowGraph& a, unsigned anchors) {
    std::vector<int> order;
    std::vector<char> seen(a.vertex_count, 0);
    auto push = [&](int v) {
        if (!seen[v]) {
            seen[v] = 1;
            order.push_back(v);
        }
    };
    if (anchors & AnchorSource) push(a.source);
    if (anchors & AnchorTarget) push(a.target);
    auto adj = undirected_adjacency(a);
    for (std::size_t head = 0;; ++head) {
        if (head == order.size()) {
            // Seed (or re-seed) from the smallest unseen vertex; the graph is
            // connected, so this only happens before any anchor is placed.
            int next = -1;
            for (int v = 0; v < a.vertex_count && next == -1; ++v)
                if (!seen[v]) next = v;
            if (next == -1) break;
            push(next);
        }
        for (auto [nb, id] : adj[order[head]]) push(nb);
    }
    return order;
}

struct EmbeddingSearch {
    const FlowGraph& a;
    const FlowGraph& b;
    unsigned anchors;
    Budget* budget;
    MultMatrix mult_a;
    MultMatrix mult_b;
    std::vector<DegreeTriple> deg_a;
    std::vector<DegreeTriple> deg_b;
    std::vector<int> order;
    std::vector<int> phi;       // a-vertex -> b-vertex or -1
    std::vector<char> used;     // b-vertex occupied
    const std::function<bool(const VertexMap&)>& emit;
    bool stopped = false;

    EmbeddingSearch(const FlowGraph& a_, const FlowGraph& b_, unsigned anchors_,
                    Budget* budget_, const std::function<bool(const VertexMap&)>& emit_)
        : a(a_), b(b_), anchors(anchors_), budget(budget_), mult_a(a_), mult_b(b_),
          deg_a(degree_triples(a_)), deg_b(degree_triples(b_)),
          order(embedding_order(a_, anchors_)), phi(a_.vertex_count, -1),
          used(b_.vertex_count, 0), emit(emit_) {}

    bool feasible(int u, int v) const {
        const DegreeTriple& da = deg_a[u];
        const DegreeTriple& db = deg_b[v];
        if (da.out > db.out || da.in > db.in || da.loops > db.loops) return false;
        if (mult_a(u, u) > mult_b(v, v)) return false;
        for (int w = 0; w < a.vertex_count; ++w) {
            if (w == u || phi[w] == -1) continue;
            if (mult_a(u, w) > mult_b(v, phi[w])) return false;
            if (mult_a(w, u) > mult_b(phi[w], v)) return false;
        }
        return true;
    }

    // Canonical edge assignment: within each parallel class, ascending ids
    // of A map to the first ascending ids of B.
    VertexMap materialize() const {
        VertexMap m;
        m.vertex_map = phi;
        m.edge_map.assign(a.edges.size(), -1);
        std::vector<int> taken(b.edges.size(), 0);
        for (std::size_t i = 0; i < a.edges.size(); ++i) {
            const int bt = phi[a.edges[i].tail];
            const int bh = phi[a.edges[i].head];
            for (std::size_t j = 0; j < b.edges.size(); ++j) {
                if (!taken[j] && b.edges[j].tail == bt && b.edges[j].head == bh) {
                    taken[j] = 1;
                    m.edge_map[i] = static_cast<int>(j);
                    break;
                }
            }
        }
        return m;
    }

    void run(std::size_t depth) {
        if (stopped) return;
        if (depth == order.size()) {
            if (!emit(materialize())) stopped = true;
            return;
        }
        const int u = order[depth];
        for (int v = 0; v < b.vertex_count && !stopped; ++v) {
            if (used[v]) continue;
            if ((anchors & AnchorSource) && u == a.source && v != b.source) continue;
            if ((anchors & AnchorTarget) && u == a.target && v != b.target) continue;
            if (budget) budget->charge();
            if (!feasible(u, v)) continue;
            phi[u] = v;
            used[v] = 1;
            run(depth + 1);
            phi[u] = -1;
            used[v] = 0;
        }
    }
};

}  // namespace detail

// Visits embeddings of A into B in deterministic order; `fn` returns false
// to stop early.  Returns true if the visit was stopped by the callback.
inline bool for_each_anchored_embedding(const FlowGraph& a, const FlowGraph& b,
                                        unsigned anchors,
                                        const std::function<bool(const VertexMap&)>& fn,
                                        Budget* budget = nullptr) {
    if (a.q() > b.q() || a.p() > b.p()) return false;
    std::optional<Budget> local;
    if (!budget) {
        local.emplace(default_node_budget());
        budget = &*local;
    }
    detail::EmbeddingSearch search(a, b, anchors, budget, fn);
    search.run(0);
    return search.stopped;
}

inline std::vector<VertexMap> find_anchored_embeddings(const FlowGraph& a, const FlowGraph& b,
                                                       unsigned anchors,
                                                       Budget* budget = nullptr) {
    std::vector<VertexMap> out;
    for_each_anchored_embedding(a, b, anchors,
                                [&](const VertexMap& m) {
                                    out.push_back(m);
                                    return true;
                                },
                                budget);
    return out;
}

inline std::optional<VertexMap> first_anchored_embedding(const FlowGraph& a, const FlowGraph& b,
                                                         unsigned anchors,
                                                         Budget* budget = nullptr) {
    std::optional<VertexMap> out;
    for_each_anchored_embedding(a, b, anchors,
                                [&](const VertexMap& m) {
                                    out = m;
                                    return false;
                                },
                                budget);
    return out;
}

// Independent checker used to re-verify witnesses before they are returned.
inline bool verify_embedding(const FlowGraph& a, const FlowGraph& b, const VertexMap& m,
                             unsigned anchors) {
    if (static_cast<int>(m.vertex_map.size()) != a.p()) return false;
    if (m.edge_map.size() != a.edges.size()) return false;
    std::vector<char> vused(b.vertex_count, 0), eused(b.edges.size(), 0);
    for (int v : m.vertex_map) {
        if (v < 0 || v >= b.vertex_count || vused[v]) return false;
        vused[v] = 1;
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const int j = m.edge_map[i];
        if (j < 0 || j >= static_cast<int>(b.edges.size()) || eused[j]) return false;
        eused[j] = 1;
        if (b.edges[j].tail != m.vertex_map[a.edges[i].tail]) return false;
        if (b.edges[j].head != m.vertex_map[a.edges[i].head]) return false;
    }
    if ((anchors & AnchorSource) && m.vertex_map[a.source] != b.source) return false;
    if ((anchors & AnchorTarget) && m.vertex_map[a.target] != b.target) return false;
    return true;
}

// Flow-graph isomorphism: source->source, target->target, bijective.
inline std::optional<VertexMap> are_isomorphic(const FlowGraph& a, const FlowGraph& b,
                                               Budget* budget = nullptr) {
    if (a.p() != b.p() || a.q() != b.q()) return std::nullopt;
    if ((a.source == a.target) != (b.source == b.target)) return std::nullopt;
    return first_anchored_embedding(a, b, AnchorBoth, budget);
}

inline bool isomorphic(const FlowGraph& a, const FlowGraph& b, Budget* budget = nullptr) {
    return are_isomorphic(a, b, budget).has_value();
}

// --- canonical key ---------------------------------------------------------
//
// The key is the lexicographically smallest "border serialization" of the
// multiplicity matrix over all vertex orderings that place s at position 0
// (and t at position 1 when s != t).  Placing vertex x at position k appends
// the fixed-length segment
//     mult(x,P[0]) .. mult(x,P[k-1]), mult(x,x), mult(P[0],x) .. mult(P[k-1],x)
// so orderings can be minimized level by level: at each level only the
// candidates achieving the globally minimal segment can extend a minimal
// ordering.  Exact, no hashing.

inline std::string canonical_key(const FlowGraph& a, Budget* budget = nullptr,
                                 int max_vertices = 64) {
    if (a.vertex_count > max_vertices)
        throw SearchBudgetExceeded("canonical_key: graph exceeds the vertex bound");
    std::optional<Budget> local;
    if (!budget) {
        local.emplace(default_node_budget());
        budget = &*local;
    }
    const detail::MultMatrix mult(a);
    for (int c : mult.m)
        if (c > 250) throw ValidationError("canonical_key: edge multiplicity too large");

    std::string key;
    key.push_back(static_cast<char>(a.vertex_count));
    key.push_back(a.source == a.target ? 0 : 1);

    const int p = a.vertex_count;
    std::vector<std::vector<int>> frontier;
    if (a.source == a.target) {
        frontier.push_back({a.source});
        key.push_back(static_cast<char>(mult(a.source, a.source)));
    } else {
        frontier.push_back({a.source, a.target});
        key.push_back(static_cast<char>(mult(a.source, a.source)));
        key.push_back(static_cast<char>(mult(a.target, a.source)));
        key.push_back(static_cast<char>(mult(a.target, a.target)));
        key.push_back(static_cast<char>(mult(a.source, a.target)));
    }
    const std::size_t fixed = frontier.front().size();

    std::vector<char> in_order(p, 0);
    std::string segment, best;
    for (std::size_t k = fixed; k < static_cast<std::size_t>(p); ++k) {
        std::vector<std::vector<int>> next;
        best.clear();
        bool have_best = false;
        for (const std::vector<int>& part : frontier) {
            std::fill(in_order.begin(), in_order.end(), 0);
            for (int v : part) in_order[v] = 1;
            for (int x = 0; x < p; ++x) {
                if (in_order[x]) continue;
                budget->charge();
                segment.clear();
                for (int v : part) segment.push_back(static_cast<char>(mult(x, v)));
                segment.push_back(static_cast<char>(mult(x, x)));
                for (int v : part) segment.push_back(static_cast<char>(mult(v, x)));
                if (!have_best || segment < best) {
                    best = segment;
                    have_best = true;
                    next.clear();
                }
                if (segment == best) {
                    next.push_back(part);
                    next.back().push_back(x);
                }
            }
        }
        key += best;
        frontier = std::move(next);
    }
    return key;
}

// Printable form of a key (for diagnostics only).
inline std::string key_hex(const std::string& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

}  // namespace fga

#endif  // FGA_ISOMORPHISM_HPP
