#ifndef FGA_LAWS_HPP
#define FGA_LAWS_HPP

// The law-checking harness: every algebraic/order/decomposition law is a
// named entry that quantifies its statement over an enumerated universe and
// reports Holds, CounterexampleFound, or (for laws that are supposed to
// fail) ExpectedFailureConfirmed with a re-verifiable counterexample tuple.

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "fga/algebra.hpp"
#include "fga/decomposition.hpp"
#include "fga/division.hpp"
#include "fga/enumerate.hpp"
#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"
#include "fga/format.hpp"
#include "fga/isomorphism.hpp"
#include "fga/order.hpp"
#include "fga/st_paths.hpp"

namespace fga {

enum class LawVerdict { Holds, CounterexampleFound, ExpectedFailureConfirmed };

inline const char* law_verdict_name(LawVerdict v) {
    switch (v) {
        case LawVerdict::Holds: return "Holds";
        case LawVerdict::CounterexampleFound: return "CounterexampleFound";
        default: return "ExpectedFailureConfirmed";
    }
}

struct LawReport {
    std::string law_id;
    UniverseSpec universe;
    long long instances_checked = 0;
    LawVerdict verdict = LawVerdict::Holds;
    std::vector<std::string> counterexample;  // .fg serializations
    std::string note;
    double elapsed_seconds = 0.0;
};

namespace lawdetail {

// ---- shared scaffolding ---------------------------------------------------

struct Ctx {
    const std::vector<FlowGraph>& u;       // universe, ascending (q, key)
    std::vector<std::pair<int, int>> ranges;  // [q] -> index range in u
    LawReport& report;
    int jobs;

    Ctx(const std::vector<FlowGraph>& universe, LawReport& r, int jobs_)
        : u(universe), report(r), jobs(jobs_) {
        int maxq = 0;
        for (const FlowGraph& g : u) maxq = std::max(maxq, g.q());
        ranges.assign(maxq + 1, {0, 0});
        int i = 0;
        for (int q = 0; q <= maxq; ++q) {
            const int begin = i;
            while (i < static_cast<int>(u.size()) && u[i].q() == q) ++i;
            ranges[q] = {begin, i};
        }
    }

    void fail(std::initializer_list<const FlowGraph*> tuple, const std::string& why = "") {
        if (report.verdict != LawVerdict::Holds) return;  // keep the first
        report.verdict = LawVerdict::CounterexampleFound;
        for (const FlowGraph* g : tuple) report.counterexample.push_back(write_fg(*g));
        if (!why.empty()) report.note = why;
    }

    bool failed() const { return report.verdict != LawVerdict::Holds; }
};

// Visit index pairs/triples in ascending total edge count, then
// lexicographically; `fn` returns false to stop.
template <typename Fn>
inline void pairs_by_total(const Ctx& c, Fn&& fn) {
    const int maxq = static_cast<int>(c.ranges.size()) - 1;
    for (int total = 0; total <= 2 * maxq; ++total) {
        for (int qa = std::max(0, total - maxq); qa <= std::min(maxq, total); ++qa) {
            const int qb = total - qa;
            for (int i = c.ranges[qa].first; i < c.ranges[qa].second; ++i)
                for (int j = c.ranges[qb].first; j < c.ranges[qb].second; ++j)
                    if (!fn(i, j)) return;
        }
    }
}

template <typename Fn>
inline void triples_by_total(const Ctx& c, Fn&& fn) {
    const int maxq = static_cast<int>(c.ranges.size()) - 1;
    for (int total = 0; total <= 3 * maxq; ++total) {
        for (int qa = 0; qa <= std::min(maxq, total); ++qa) {
            for (int qb = 0; qb <= std::min(maxq, total - qa); ++qb) {
                const int qc = total - qa - qb;
                if (qc < 0 || qc > maxq) continue;
                for (int i = c.ranges[qa].first; i < c.ranges[qa].second; ++i)
                    for (int j = c.ranges[qb].first; j < c.ranges[qb].second; ++j)
                        for (int k = c.ranges[qc].first; k < c.ranges[qc].second; ++k)
                            if (!fn(i, j, k)) return;
            }
        }
    }
}

// Plain full scans (all pairs / triples, lexicographic) with optional
// worker-pool chunking over the outer index; the body must be pure w.r.t.
// shared state except for the atomics it is handed.
inline void parallel_outer(long long n, int jobs, const std::function<void(long long)>& body) {
    if (jobs <= 1 || n < 256) {
        for (long long i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const long long i = next.fetch_add(16);
                if (i >= n) break;
                for (long long j = i; j < std::min(n, i + 16); ++j) body(j);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// Deterministic violation recording for parallel scans: keep the smallest
// (outer, inner, inner2) triple.
struct MinViolation {
    std::atomic<long long> packed{-1};

    static long long pack(int i, int j, int k) {
        return (static_cast<long long>(i) << 42) | (static_cast<long long>(j) << 21) | k;
    }

    void offer(int i, int j, int k) {
        long long v = pack(i, j, k);
        long long cur = packed.load();
        while ((cur == -1 || v < cur) && !packed.compare_exchange_weak(cur, v)) {}
    }

    bool found() const { return packed.load() != -1; }
    int i() const { return static_cast<int>(packed.load() >> 42); }
    int j() const { return static_cast<int>((packed.load() >> 21) & ((1 << 21) - 1)); }
    int k() const { return static_cast<int>(packed.load() & ((1 << 21) - 1)); }
};

// ---- memoized per-graph attributes ---------------------------------------

struct GraphAttrs {
    std::vector<std::string> keys;
    std::vector<char> st;
    std::vector<int> chi_size;
    std::vector<int> delta_size;
    std::vector<std::vector<std::string>> decomp_keys;

    explicit GraphAttrs(const std::vector<FlowGraph>& u, bool with_decomp = false) {
        keys.reserve(u.size());
        st.reserve(u.size());
        for (const FlowGraph& g : u) {
            keys.push_back(canonical_key(g));
            st.push_back(is_st_flow_graph(g) ? 1 : 0);
            chi_size.push_back(static_cast<int>(chi(g).size()));
            delta_size.push_back(static_cast<int>(splitting_edges(g).size()));
        }
        if (with_decomp) {
            decomp_keys.reserve(u.size());
            for (const FlowGraph& g : u) {
                std::vector<std::string> ks;
                for (const FlowGraph& comp : canonical_decomposition(g).components)
                    ks.push_back(canonical_key(comp));
                decomp_keys.push_back(std::move(ks));
            }
        }
    }
};

// ---- natural-map verifications -------------------------------------------

// Given an edge bijection between two graphs, check that it induces a
// consistent vertex bijection respecting anchors; that certifies the graphs
// isomorphic in O(E).  Falls back to the full search when inapplicable.
inline bool natural_edge_iso(const FlowGraph& l, const FlowGraph& r,
                             const std::vector<int>& edge_map) {
    if (l.q() != r.q() || l.p() != r.p()) return false;
    if (l.q() == 0) return (l.source == l.target) == (r.source == r.target) && l.p() == 1;
    std::vector<int> vmap(l.vertex_count, -1);
    std::vector<char> hit(r.vertex_count, 0);
    auto bind = [&](int u, int v) {
        if (vmap[u] == -1) {
            if (hit[v]) return false;
            vmap[u] = v;
            hit[v] = 1;
            return true;
        }
        return vmap[u] == v;
    };
    for (int e = 0; e < l.q(); ++e) {
        const int f = edge_map[e];
        if (f < 0 || f >= r.q()) return false;
        if (!bind(l.edges[e].tail, r.edges[f].tail)) return false;
        if (!bind(l.edges[e].head, r.edges[f].head)) return false;
    }
    // Connectivity plus q>0 means every vertex is matched.
    for (int v = 0; v < l.vertex_count; ++v)
        if (vmap[v] == -1) return false;
    return vmap[l.source] == r.source && vmap[l.target] == r.target;
}

// (A*B)*C vs A*(B*C): both sides carry Lambda tags flattening to (a,b,c).
inline bool check_otimes_assoc(const FlowGraph& a, const FlowGraph& b, const FlowGraph& c) {
    const ProductResult ab = otimes(a, b);
    const ProductResult l = otimes(ab.product, c);
    const ProductResult bc = otimes(b, c);
    const ProductResult r = otimes(a, bc.product);
    if (l.product == r.product) return true;
    if (l.product.q() != r.product.q()) return false;
    // Map left edge ((a,b),c) to right edge (a,(b,c)).
    const int qb = b.q(), qc = c.q();
    std::vector<int> edge_map(l.product.q());
    for (int e = 0; e < l.product.q(); ++e) {
        const auto [abe, ce] = l.edge_bijection[e];
        const auto [ae, be] = ab.edge_bijection[abe];
        // Right edge ids: (a-edge) major, then bc-edge = be*qc + ce.
        edge_map[e] = ae * (qb * qc) + be * qc + ce;
    }
    if (natural_edge_iso(l.product, r.product, edge_map)) return true;
    return isomorphic(l.product, r.product);
}

// (A+B)*C vs (A*C)+(B*C).
inline bool check_right_distrib(const FlowGraph& a, const FlowGraph& b, const FlowGraph& c) {
    const SumResult ab = oplus(a, b);
    const ProductResult l = otimes(ab.sum, c);
    const FlowGraph r = oplus_graph(otimes_graph(a, c), otimes_graph(b, c));
    if (l.product == r) return true;
    if (l.product.q() != r.q()) return false;
    const int qc = c.q();
    std::vector<int> edge_map(l.product.q());
    for (int e = 0; e < l.product.q(); ++e) {
        const auto [se, ce] = l.edge_bijection[e];
        // Sum edge ids are A's then B's; likewise on the right-hand side.
        edge_map[e] = se * qc + ce;  // (a*C edges) then (b*C edges), same order
    }
    if (natural_edge_iso(l.product, r, edge_map)) return true;
    return isomorphic(l.product, r);
}

}  // namespace lawdetail

// ---- public surface -------------------------------------------------------

struct LawDef {
    bool expected_fail = false;
    // Default universe size: triple-quantified laws get 3, pair laws 4,
    // existence searches 5.
    int default_max_edges = 4;
    std::function<void(lawdetail::Ctx&)> run;
};

const std::map<std::string, LawDef>& law_catalog();

inline UniverseSpec default_spec_for(const std::string& law_id) {
    const auto& cat = law_catalog();
    auto it = cat.find(law_id);
    if (it == cat.end()) throw UnknownLaw("unknown law id: " + law_id);
    UniverseSpec spec;
    spec.max_edges = it->second.default_max_edges;
    return spec;
}

inline LawReport check_law(const std::string& law_id, const UniverseSpec& spec, int jobs = 1) {
    const auto& cat = law_catalog();
    auto it = cat.find(law_id);
    if (it == cat.end()) throw UnknownLaw("unknown law id: " + law_id);
    LawReport report;
    report.law_id = law_id;
    report.universe = spec;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<FlowGraph>& u = universe_upto(spec.max_edges);
    lawdetail::Ctx ctx(u, report, jobs);
    it->second.run(ctx);
    if (it->second.expected_fail && report.verdict == LawVerdict::CounterexampleFound)
        report.verdict = LawVerdict::ExpectedFailureConfirmed;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

inline std::vector<std::string> law_ids() {
    std::vector<std::string> out;
    for (const auto& [id, def] : law_catalog()) out.push_back(id);
    return out;
}

// First tuple (ascending total edge count, then lexicographic) violating
// the predicate; the predicate returns true when the tuple satisfies the
// law being probed.
inline std::optional<std::vector<FlowGraph>> find_counterexample(
    const std::function<bool(const std::vector<FlowGraph>&)>& predicate, int arity,
    const UniverseSpec& spec) {
    if (arity < 1 || arity > 3) throw DomainError("find_counterexample: arity must be 1..3");
    const std::vector<FlowGraph>& u = universe_upto(spec.max_edges);
    LawReport scratch;
    lawdetail::Ctx c(u, scratch, 1);
    std::optional<std::vector<FlowGraph>> out;
    auto test = [&](std::vector<FlowGraph> tuple) {
        if (!predicate(tuple)) out = std::move(tuple);
        return !out.has_value();
    };
    if (arity == 1) {
        for (const FlowGraph& g : u)
            if (!test({g})) break;
    } else if (arity == 2) {
        lawdetail::pairs_by_total(c, [&](int i, int j) { return test({u[i], u[j]}); });
    } else {
        lawdetail::triples_by_total(c,
                                    [&](int i, int j, int k) { return test({u[i], u[j], u[k]}); });
    }
    return out;
}

}  // namespace fga

#include "fga/laws_catalog.hpp"

#endif  // FGA_LAWS_HPP
