#ifndef FGA_ORDER_HPP
#define FGA_ORDER_HPP

// The weak order (via (s,t)-splittings and edge-disjoint embeddings of the
// two parts) and the strong order (two independent anchored embeddings).
// Witnesses are materialized and re-verified by independent checkers.

#include <optional>
#include <vector>

#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"
#include "fga/isomorphism.hpp"

namespace fga {

// --- (s,t)-splittings ------------------------------------------------------

struct StSplitting {
    std::vector<int> h1_edges, h2_edges;  // partition of A's edge ids
    std::vector<int> h1_verts, h2_verts;  // induced vertex sets (s resp. t added)
};

namespace detail {

// The subgraph on `edge_ids` plus `extra_vertex` must be connected.
inline bool part_connected(const FlowGraph& a, const std::vector<int>& edge_ids,
                           int extra_vertex, std::vector<int>* verts_out) {
    std::vector<char> in(a.vertex_count, 0);
    in[extra_vertex] = 1;
    for (int e : edge_ids) in[a.edges[e].tail] = in[a.edges[e].head] = 1;
    Dsu dsu(a.vertex_count);
    for (int e : edge_ids) dsu.unite(a.edges[e].tail, a.edges[e].head);
    const int root = dsu.find(extra_vertex);
    std::vector<int> verts;
    for (int v = 0; v < a.vertex_count; ++v) {
        if (!in[v]) continue;
        if (dsu.find(v) != root) return false;
        verts.push_back(v);
    }
    if (verts_out) *verts_out = std::move(verts);
    return true;
}

}  // namespace detail

// All (s,t)-splittings, deterministic order (by bitmask of H1 membership
// ascending).  The degenerate splittings (everything in H1, or in H2) are
// included whenever connectivity permits.
inline std::vector<StSplitting> enumerate_st_splittings(const FlowGraph& a,
                                                        Budget* budget = nullptr) {
    const int q = a.q();
    if (q > 24) throw SearchBudgetExceeded("enumerate_st_splittings: too many edges");
    std::optional<Budget> local;
    if (!budget) {
        local.emplace(default_node_budget());
        budget = &*local;
    }
    std::vector<StSplitting> out;
    for (unsigned long mask = 0; mask < (1ul << q); ++mask) {
        budget->charge();
        StSplitting sp;
        for (int e = 0; e < q; ++e)
            ((mask >> e) & 1u ? sp.h1_edges : sp.h2_edges).push_back(e);
        if (!detail::part_connected(a, sp.h1_edges, a.source, &sp.h1_verts)) continue;
        if (!detail::part_connected(a, sp.h2_edges, a.target, &sp.h2_verts)) continue;
        out.push_back(std::move(sp));
    }
    return out;
}

// --- strong order ----------------------------------------------------------

struct StrongWitness {
    VertexMap phi_s;  // full embedding with source -> source
    VertexMap phi_t;  // full embedding with target -> target
};

inline bool verify_strong_witness(const FlowGraph& a, const FlowGraph& b,
                                  const StrongWitness& w) {
    return verify_embedding(a, b, w.phi_s, AnchorSource) &&
           verify_embedding(a, b, w.phi_t, AnchorTarget);
}

inline std::optional<StrongWitness> strong_leq(const FlowGraph& a, const FlowGraph& b,
                                               Budget* budget = nullptr) {
    auto phi_s = first_anchored_embedding(a, b, AnchorSource, budget);
    if (!phi_s) return std::nullopt;
    auto phi_t = first_anchored_embedding(a, b, AnchorTarget, budget);
    if (!phi_t) return std::nullopt;
    StrongWitness w{std::move(*phi_s), std::move(*phi_t)};
    if (!verify_strong_witness(a, b, w))
        throw Error("strong_leq: witness failed independent re-verification");
    return w;
}

// --- weak order ------------------------------------------------------------

struct WeakWitness {
    StSplitting splitting;
    VertexMap phi1;  // defined on all of A's vertices; meaningful on H1 (-1 elsewhere)
    VertexMap phi2;  // likewise for H2
};

inline bool verify_weak_witness(const FlowGraph& a, const FlowGraph& b, const WeakWitness& w) {
    // Splitting validity.
    std::vector<char> seen(a.edges.size(), 0);
    for (int e : w.splitting.h1_edges) {
        if (e < 0 || e >= a.q() || seen[e]) return false;
        seen[e] = 1;
    }
    for (int e : w.splitting.h2_edges) {
        if (e < 0 || e >= a.q() || seen[e]) return false;
        seen[e] = 1;
    }
    for (char c : seen)
        if (!c) return false;
    std::vector<int> v1, v2;
    if (!detail::part_connected(a, w.splitting.h1_edges, a.source, &v1)) return false;
    if (!detail::part_connected(a, w.splitting.h2_edges, a.target, &v2)) return false;

    // Each part embeds; anchors; edge images disjoint.
    auto check_part = [&](const std::vector<int>& verts, const std::vector<int>& edge_ids,
                          const VertexMap& phi, int a_anchor, int b_anchor) {
        if (static_cast<int>(phi.vertex_map.size()) != a.p()) return false;
        if (phi.edge_map.size() != a.edges.size()) return false;
        std::vector<char> used(b.vertex_count, 0);
        for (int v : verts) {
            const int img = phi.vertex_map[v];
            if (img < 0 || img >= b.p() || used[img]) return false;
            used[img] = 1;
        }
        if (phi.vertex_map[a_anchor] != b_anchor) return false;
        for (int e : edge_ids) {
            const int img = phi.edge_map[e];
            if (img < 0 || img >= b.q()) return false;
            if (b.edges[img].tail != phi.vertex_map[a.edges[e].tail]) return false;
            if (b.edges[img].head != phi.vertex_map[a.edges[e].head]) return false;
        }
        return true;
    };
    if (!check_part(v1, w.splitting.h1_edges, w.phi1, a.source, b.source)) return false;
    if (!check_part(v2, w.splitting.h2_edges, w.phi2, a.target, b.target)) return false;

    std::vector<char> img_used(b.edges.size(), 0);
    for (int e : w.splitting.h1_edges) {
        if (img_used[w.phi1.edge_map[e]]) return false;
        img_used[w.phi1.edge_map[e]] = 1;
    }
    for (int e : w.splitting.h2_edges) {
        if (img_used[w.phi2.edge_map[e]]) return false;
        img_used[w.phi2.edge_map[e]] = 1;
    }
    return true;
}

namespace detail {

// Joint backtracking: map the part's vertices injectively into B, preserve
// adjacency within the part, and respect the remaining per-pair edge
// capacities (so that both parts' edge images can be chosen disjoint).
struct PartEmbedder {
    const FlowGraph& a;
    const FlowGraph& b;
    const std::vector<int>& verts;
    std::vector<std::vector<int>> part_mult;  // local multiplicities between part verts
    std::vector<int>& cap;                    // b (u,v) -> remaining edge capacity
    std::vector<char>& b_used;                // occupied b vertices (this part only)
    std::vector<int> order;
    std::vector<int> phi;  // a vertex -> b vertex (part vertices only)
    Budget* budget;

    PartEmbedder(const FlowGraph& a_, const FlowGraph& b_, const std::vector<int>& verts_,
                 const std::vector<int>& edge_ids, int anchor, std::vector<int>& cap_,
                 std::vector<char>& b_used_, Budget* budget_)
        : a(a_), b(b_), verts(verts_), cap(cap_), b_used(b_used_),
          phi(a_.vertex_count, -1), budget(budget_) {
        part_mult.assign(a.vertex_count, std::vector<int>(a.vertex_count, 0));
        for (int e : edge_ids) ++part_mult[a.edges[e].tail][a.edges[e].head];
        // Anchor-first BFS order over the part's own edges.
        std::vector<char> in_part(a.vertex_count, 0), seen(a.vertex_count, 0);
        for (int v : verts) in_part[v] = 1;
        order.push_back(anchor);
        seen[anchor] = 1;
        for (std::size_t head = 0;; ++head) {
            if (head == order.size()) {
                int nxt = -1;
                for (int v : verts)
                    if (!seen[v]) {
                        nxt = v;
                        break;
                    }
                if (nxt == -1) break;  // parts are connected, so only the seed path runs
                seen[nxt] = 1;
                order.push_back(nxt);
            }
            const int u = order[head];
            for (int v : verts) {
                if (seen[v]) continue;
                if (part_mult[u][v] > 0 || part_mult[v][u] > 0) {
                    seen[v] = 1;
                    order.push_back(v);
                }
            }
        }
    }

    bool feasible(int u, int v) const {
        if (part_mult[u][u] > cap[v * b.vertex_count + v]) return false;
        for (int w : verts) {
            if (w == u || phi[w] == -1) continue;
            if (part_mult[u][w] > cap[v * b.vertex_count + phi[w]]) return false;
            if (part_mult[w][u] > cap[phi[w] * b.vertex_count + v]) return false;
        }
        return true;
    }

    // `commit` subtracts this part's class usage from the shared capacities.
    void commit(int sign) {
        for (int u : verts)
            for (int w : verts) {
                if (part_mult[u][w] == 0) continue;
                cap[phi[u] * b.vertex_count + phi[w]] -= sign * part_mult[u][w];
            }
    }

    template <typename Fn>
    bool search(std::size_t depth, int b_anchor, Fn&& found) {
        if (depth == order.size()) return found(phi);
        const int u = order[depth];
        for (int v = 0; v < b.vertex_count; ++v) {
            if (b_used[v]) continue;
            if (depth == 0 && v != b_anchor) continue;
            if (budget) budget->charge();
            if (!feasible(u, v)) continue;
            phi[u] = v;
            b_used[v] = 1;
            if (search(depth + 1, b_anchor, found)) return true;
            phi[u] = -1;
            b_used[v] = 0;
        }
        return false;
    }
};

}  // namespace detail

inline std::optional<WeakWitness> weak_leq(const FlowGraph& a, const FlowGraph& b,
                                           Budget* budget = nullptr) {
    if (a.q() > b.q()) return std::nullopt;
    std::optional<Budget> local;
    if (!budget) {
        local.emplace(default_node_budget());
        budget = &*local;
    }
    const detail::MultMatrix mult_b(b);

    for (StSplitting& sp : enumerate_st_splittings(a, budget)) {
        std::vector<int> cap = mult_b.m;
        std::vector<char> used1(b.vertex_count, 0), used2(b.vertex_count, 0);
        detail::PartEmbedder e1(a, b, sp.h1_verts, sp.h1_edges, a.source, cap, used1, budget);
        detail::PartEmbedder e2(a, b, sp.h2_verts, sp.h2_edges, a.target, cap, used2, budget);
        std::optional<WeakWitness> witness;
        e1.search(0, b.source, [&](const std::vector<int>& phi1) {
            e1.commit(+1);
            const bool ok = e2.search(0, b.target, [&](const std::vector<int>& phi2) {
                // Materialize edge maps: phi1's classes take the lowest free
                // ids, phi2 the next ones; capacities guarantee they fit.
                WeakWitness w;
                w.splitting = sp;
                w.phi1.vertex_map = phi1;
                w.phi2.vertex_map = phi2;
                w.phi1.edge_map.assign(a.edges.size(), -1);
                w.phi2.edge_map.assign(a.edges.size(), -1);
                std::vector<char> taken(b.edges.size(), 0);
                auto assign = [&](const std::vector<int>& edge_ids, VertexMap& phi) {
                    for (int e : edge_ids) {
                        const int bt = phi.vertex_map[a.edges[e].tail];
                        const int bh = phi.vertex_map[a.edges[e].head];
                        for (int j = 0; j < b.q(); ++j) {
                            if (!taken[j] && b.edges[j].tail == bt && b.edges[j].head == bh) {
                                taken[j] = 1;
                                phi.edge_map[e] = j;
                                break;
                            }
                        }
                    }
                };
                assign(sp.h1_edges, w.phi1);
                assign(sp.h2_edges, w.phi2);
                witness = std::move(w);
                return true;
            });
            e1.commit(-1);
            return ok;
        });
        if (witness) {
            if (!verify_weak_witness(a, b, *witness))
                throw Error("weak_leq: witness failed independent re-verification");
            return witness;
        }
    }
    return std::nullopt;
}

}  // namespace fga

#endif  // FGA_ORDER_HPP
