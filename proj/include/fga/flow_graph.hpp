#ifndef FGA_FLOW_GRAPH_HPP
#define FGA_FLOW_GRAPH_HPP

// The flow-graph value model: a finite directed weakly-connected multigraph
// with distinguished source and target vertices.  Vertices are dense indices
// 0..vertex_count-1; edges are kept in a stable order, the index of an edge
// in `edges` is its edge id.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "fga/errors.hpp"

namespace fga {

struct Edge {
    int tail;
    int head;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

// Small union-find used for connectivity checks and the product gluing.
class Dsu {
public:
    explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

struct FlowGraph {
    int vertex_count = 1;
    std::vector<Edge> edges;
    int source = 0;
    int target = 0;

    int p() const { return vertex_count; }
    int q() const { return static_cast<int>(edges.size()); }

    // Structural (labeled) equality; semantic equality is isomorphism.
    friend bool operator==(const FlowGraph& a, const FlowGraph& b) {
        return a.vertex_count == b.vertex_count && a.source == b.source &&
               a.target == b.target && a.edges == b.edges;
    }
};

enum class GraphClass { Trivial, Infinitesimal, GeneralNonInfinitesimal };

inline bool is_trivial(const FlowGraph& a) { return a.vertex_count == 1 && a.edges.empty(); }

inline bool is_infinitesimal(const FlowGraph& a) {
    return a.source == a.target && !is_trivial(a);
}

inline GraphClass classify(const FlowGraph& a) {
    if (is_trivial(a)) return GraphClass::Trivial;
    if (is_infinitesimal(a)) return GraphClass::Infinitesimal;
    return GraphClass::GeneralNonInfinitesimal;
}

inline const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::Trivial: return "Trivial";
        case GraphClass::Infinitesimal: return "Infinitesimal";
        default: return "GeneralNonInfinitesimal";
    }
}

// Validating constructor; every FlowGraph in the system goes through here.
inline FlowGraph make_flow_graph(int vertex_count, std::vector<Edge> edges,
                                 int source, int target) {
    if (vertex_count < 1)
        throw ValidationError("flow graph needs at least one vertex");
    if (source < 0 || source >= vertex_count || target < 0 || target >= vertex_count)
        throw ValidationError("source/target index out of range");
    Dsu dsu(vertex_count);
    for (const Edge& e : edges) {
        if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count)
            throw ValidationError("edge endpoint out of range");
        dsu.unite(e.tail, e.head);
    }
    const int root = dsu.find(0);
    for (int v = 1; v < vertex_count; ++v)
        if (dsu.find(v) != root)
            throw ValidationError("underlying undirected graph is not connected");
    return FlowGraph{vertex_count, std::move(edges), source, target};
}

// The graphical natural number F_n: a directed chain of length n.
inline FlowGraph nat(int n) {
    if (n < 0) throw DomainError("nat requires a nonnegative integer");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.push_back(Edge{i, i + 1});
    return make_flow_graph(n + 1, std::move(edges), 0, n);
}

// One vertex with one loop; the exceptional otimes-identity absorber.
inline FlowGraph c1() { return make_flow_graph(1, {Edge{0, 0}}, 0, 0); }

// Underlying undirected multigraph U(G): one unordered edge per directed
// edge, tagged implicitly by sharing the directed edge's id (same index).
struct UndirectedForm {
    int vertex_count = 1;
    std::vector<std::pair<int, int>> edges;  // normalized (min,max) per edge id
};

inline UndirectedForm undirected_form(const FlowGraph& a) {
    UndirectedForm u;
    u.vertex_count = a.vertex_count;
    u.edges.reserve(a.edges.size());
    for (const Edge& e : a.edges)
        u.edges.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head));
    return u;
}

// Undirected adjacency as (neighbor, edge id) lists; loops appear once.
inline std::vector<std::vector<std::pair<int, int>>> undirected_adjacency(const FlowGraph& a) {
    std::vector<std::vector<std::pair<int, int>>> adj(a.vertex_count);
    for (int i = 0; i < a.q(); ++i) {
        const Edge& e = a.edges[i];
        adj[e.tail].emplace_back(e.head, i);
        if (e.head != e.tail) adj[e.head].emplace_back(e.tail, i);
    }
    return adj;
}

struct DegreeTriple {
    int out = 0;
    int in = 0;
    int loops = 0;  // counted in neither `out` nor `in`

    friend bool operator==(const DegreeTriple& a, const DegreeTriple& b) {
        return a.out == b.out && a.in == b.in && a.loops == b.loops;
    }
};

inline std::vector<DegreeTriple> degree_triples(const FlowGraph& a) {
    std::vector<DegreeTriple> d(a.vertex_count);
    for (const Edge& e : a.edges) {
        if (e.tail == e.head) {
            ++d[e.tail].loops;
        } else {
            ++d[e.tail].out;
            ++d[e.head].in;
        }
    }
    return d;
}

// Component labels of U(G) after deleting vertex `w` and all its incident
// edges; entry for `w` is -1.  Used by splitting-vertex detection.
inline std::vector<int> components_without_vertex(const FlowGraph& a, int w) {
    Dsu dsu(a.vertex_count);
    for (const Edge& e : a.edges)
        if (e.tail != w && e.head != w) dsu.unite(e.tail, e.head);
    std::vector<int> label(a.vertex_count, -1);
    int next = 0;
    std::vector<int> root_label(a.vertex_count, -1);
    for (int v = 0; v < a.vertex_count; ++v) {
        if (v == w) continue;
        int r = dsu.find(v);
        if (root_label[r] == -1) root_label[r] = next++;
        label[v] = root_label[r];
    }
    return label;
}

// Component labels of U(G) after deleting edge id `skip` (vertices kept).
inline std::vector<int> components_without_edge(const FlowGraph& a, int skip,
                                                int* component_count = nullptr) {
    Dsu dsu(a.vertex_count);
    for (int i = 0; i < a.q(); ++i)
        if (i != skip) dsu.unite(a.edges[i].tail, a.edges[i].head);
    std::vector<int> label(a.vertex_count, -1);
    int next = 0;
    std::vector<int> root_label(a.vertex_count, -1);
    for (int v = 0; v < a.vertex_count; ++v) {
        int r = dsu.find(v);
        if (root_label[r] == -1) root_label[r] = next++;
        label[v] = root_label[r];
    }
    if (component_count) *component_count = next;
    return label;
}

}  // namespace fga

#endif  // FGA_FLOW_GRAPH_HPP
