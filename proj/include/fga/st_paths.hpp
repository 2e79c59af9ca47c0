#ifndef FGA_ST_PATHS_HPP
#define FGA_ST_PATHS_HPP

// The st Property: an edge has it when some simple undirected s-t path
// traverses it.  Checked by exhaustive simple-path DFS in U(G) with
// per-edge early exit, under an expansion budget.

#include <optional>
#include <vector>

#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"

namespace fga {

namespace detail {

struct StSearch {
    const FlowGraph& a;
    std::vector<std::vector<std::pair<int, int>>> adj;  // undirected (neighbor, edge id)
    std::vector<char> on_path_vertex;
    std::vector<int> path_edges;
    std::vector<char> flags;
    int flagged = 0;
    Budget* budget;

    StSearch(const FlowGraph& a_, Budget* b)
        : a(a_), adj(undirected_adjacency(a_)), on_path_vertex(a_.vertex_count, 0),
          flags(a_.edges.size(), 0), budget(b) {}

    void mark_path() {
        for (int e : path_edges) {
            if (!flags[e]) {
                flags[e] = 1;
                ++flagged;
            }
        }
    }

    void dfs(int v) {
        if (flagged == static_cast<int>(flags.size())) return;  // all edges covered
        if (v == a.target) {
            // A simple path ends the first time it reaches t.
            mark_path();
            return;
        }
        budget->charge();
        on_path_vertex[v] = 1;
        for (auto [nb, id] : adj[v]) {
            if (nb == v) continue;  // loops never lie on a simple path
            if (on_path_vertex[nb]) continue;
            path_edges.push_back(id);
            dfs(nb);
            path_edges.pop_back();
        }
        on_path_vertex[v] = 0;
    }
};

}  // namespace detail

// Per-edge st flags: flag[e] is true iff e lies on a simple undirected
// s-t path.  For s = t no edge qualifies (the only s-t path is empty).
inline std::vector<char> st_edge_flags(const FlowGraph& a, Budget* budget = nullptr) {
    std::optional<Budget> local;
    if (!budget) {
        local.emplace(default_node_budget());
        budget = &*local;
    }
    detail::StSearch search(a, budget);
    if (a.source != a.target) search.dfs(a.source);
    return search.flags;
}

inline bool is_st_flow_graph(const FlowGraph& a, std::vector<char>* flags_out = nullptr,
                             Budget* budget = nullptr) {
    std::vector<char> flags = st_edge_flags(a, budget);
    bool all = true;
    for (char f : flags) all = all && f;
    if (flags_out) *flags_out = std::move(flags);
    return all;  // trivial graph: vacuously true
}

// The st-core: delete every edge lacking the st Property and return the
// subgraph induced by the surviving edges together with s and t.
inline FlowGraph st_core(const FlowGraph& a, Budget* budget = nullptr) {
    if (a.source == a.target) {
        // No edge of an infinitesimal has the st Property; the core is the
        // trivial graph on the anchor alone.
        return nat(0);
    }
    const std::vector<char> flags = st_edge_flags(a, budget);
    bool any = false;
    for (char f : flags) any = any || f;
    if (!any)
        throw CoreUndefined("st-core undefined: s != t with no simple s-t path");

    std::vector<int> relabel(a.vertex_count, -1);
    int next = 0;
    auto touch = [&](int v) {
        if (relabel[v] == -1) relabel[v] = next++;
    };
    // Surviving vertices keep their relative order.
    std::vector<char> alive(a.vertex_count, 0);
    alive[a.source] = alive[a.target] = 1;
    for (int i = 0; i < a.q(); ++i)
        if (flags[i]) alive[a.edges[i].tail] = alive[a.edges[i].head] = 1;
    for (int v = 0; v < a.vertex_count; ++v)
        if (alive[v]) touch(v);

    std::vector<Edge> edges;
    for (int i = 0; i < a.q(); ++i)
        if (flags[i]) edges.push_back(Edge{relabel[a.edges[i].tail], relabel[a.edges[i].head]});
    return make_flow_graph(next, std::move(edges), relabel[a.source], relabel[a.target]);
}

}  // namespace fga

#endif  // FGA_ST_PATHS_HPP
