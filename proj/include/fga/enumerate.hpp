#ifndef FGA_ENUMERATE_HPP
#define FGA_ENUMERATE_HPP

// Exhaustive enumeration of non-isomorphic flow graphs by edge count:
// generate connected directed multigraphs (combinations-with-repetition
// over the p*p edge slots), fan out over all (s,t) anchor choices, and
// dedup by canonical key.  Exact at desk scale.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"
#include "fga/isomorphism.hpp"
#include "fga/st_paths.hpp"

namespace fga {

struct UniverseSpec {
    int max_edges = 4;
    int max_vertices = -1;  // -1: effective bound max_edges + 1
    bool st_only = false;
    bool include_infinitesimals = true;

    int effective_max_vertices() const {
        const int bound = max_edges + 1;
        return (max_vertices < 0 || max_vertices > bound) ? bound : max_vertices;
    }
};

namespace detail {

// All graphs with exactly `edge_count` edges satisfying `spec`, sorted by
// canonical key (one representative per isomorphism class).
inline std::vector<FlowGraph> enumerate_exact_edges(const UniverseSpec& spec, int edge_count) {
    std::map<std::string, FlowGraph> by_key;
    const int max_p = std::min(spec.effective_max_vertices(), edge_count + 1);

    for (int p = 1; p <= max_p; ++p) {
        if (p > 1 && edge_count < p - 1) continue;  // connectivity needs q >= p-1
        const int slots = p * p;
        // Nondecreasing slot sequence of length edge_count = edge multiset.
        std::vector<int> pick(edge_count, 0);
        bool done = (edge_count == 0 && p > 1);
        while (!done) {
            std::vector<Edge> edges;
            edges.reserve(edge_count);
            Dsu dsu(p);
            for (int s : pick) {
                edges.push_back(Edge{s / p, s % p});
                dsu.unite(s / p, s % p);
            }
            bool connected = true;
            const int root = p > 0 ? dsu.find(0) : 0;
            for (int v = 1; v < p && connected; ++v) connected = dsu.find(v) == root;

            if (connected) {
                for (int s = 0; s < p; ++s) {
                    for (int t = 0; t < p; ++t) {
                        FlowGraph g{p, edges, s, t};
                        if (!spec.include_infinitesimals && is_infinitesimal(g)) continue;
                        if (spec.st_only && !is_st_flow_graph(g)) continue;
                        std::string key = canonical_key(g);
                        by_key.emplace(std::move(key), std::move(g));
                    }
                }
            }

            // Advance the nondecreasing sequence.
            if (edge_count == 0) break;
            int i = edge_count - 1;
            while (i >= 0 && pick[i] == slots - 1) --i;
            if (i < 0) {
                done = true;
            } else {
                const int v = pick[i] + 1;
                for (int j = i; j < edge_count; ++j) pick[j] = v;
            }
        }
        if (edge_count == 0 && p == 1) {
            // Only the trivial graph has zero edges; it was produced above.
        }
    }

    std::vector<FlowGraph> out;
    out.reserve(by_key.size());
    for (auto& [key, g] : by_key) out.push_back(std::move(g));
    return out;
}

}  // namespace detail

// One representative per isomorphism class, ordered by (edge count,
// canonical key) ascending.
inline std::vector<FlowGraph> enumerate_flow_graphs(const UniverseSpec& spec) {
    std::vector<FlowGraph> out;
    for (int q = 0; q <= spec.max_edges; ++q) {
        std::vector<FlowGraph> batch = detail::enumerate_exact_edges(spec, q);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

// Graphs with exactly `edge_count` edges (memoized), ascending canonical key.
// Memoization is not synchronized: warm the cache before any parallel phase.
inline const std::vector<FlowGraph>& universe_exact(int edge_count) {
    static std::vector<std::vector<FlowGraph>> cache;
    while (static_cast<int>(cache.size()) <= edge_count) {
        UniverseSpec spec;
        spec.max_edges = static_cast<int>(cache.size());
        cache.push_back(detail::enumerate_exact_edges(spec, spec.max_edges));
    }
    return cache[edge_count];
}

// Memoized default universe (no filters) up to `max_edges`; the shared
// workhorse of division, irreducibility search, and the law suite.
inline const std::vector<FlowGraph>& universe_upto(int max_edges) {
    static std::map<int, std::vector<FlowGraph>> merged;
    auto it = merged.find(max_edges);
    if (it == merged.end()) {
        std::vector<FlowGraph> all;
        for (int q = 0; q <= max_edges; ++q) {
            const auto& batch = universe_exact(q);
            all.insert(all.end(), batch.begin(), batch.end());
        }
        it = merged.emplace(max_edges, std::move(all)).first;
    }
    return it->second;
}

}  // namespace fga

#endif  // FGA_ENUMERATE_HPP
