#include "doctest.h"

#include <string>
#include <vector>

#include "fga/fga.hpp"

using namespace fga;

namespace {

// Definitional s-standardness: no decomposition A = I + X with I a
// nontrivial infinitesimal, found by exhaustive search over the universe
// bounded by A's own size.  Independent of the fast criterion under test.
bool s_standard_by_search(const FlowGraph& a) {
    for (const FlowGraph& i : universe_upto(a.q())) {
        if (!is_infinitesimal(i) || i.q() > a.q()) continue;
        for (const FlowGraph& x : universe_upto(a.q())) {
            if (i.q() + x.q() != a.q()) continue;
            if (i.p() + x.p() != a.p() + 1) continue;
            if (isomorphic(oplus_graph(i, x), a)) return false;
        }
    }
    return true;
}

bool t_standard_by_search(const FlowGraph& a) {
    for (const FlowGraph& i : universe_upto(a.q())) {
        if (!is_infinitesimal(i) || i.q() > a.q()) continue;
        for (const FlowGraph& x : universe_upto(a.q())) {
            if (i.q() + x.q() != a.q()) continue;
            if (i.p() + x.p() != a.p() + 1) continue;
            if (isomorphic(oplus_graph(x, i), a)) return false;
        }
    }
    return true;
}

// The nested recursion for the canonical decomposition: cut at the
// splitting vertex of maximal r_s and recurse into the left remainder.
// The production algorithm cuts at minimal r_s from the left instead;
// agreement of the two is the correctness property.
std::vector<FlowGraph> decompose_from_the_right(const FlowGraph& a) {
    const std::vector<int> xs = chi(a);
    if (xs.empty()) return {a};
    int best = xs[0], best_rs = -1;
    for (int w : xs) {
        const int rs = rank(a, w).r_s;
        if (rs > best_rs) {
            best_rs = rs;
            best = w;
        }
    }
    const SplitResult s = split_at(a, best);
    std::vector<FlowGraph> out = decompose_from_the_right(s.left);
    out.push_back(s.right);
    return out;
}

std::vector<std::string> keys_of(const std::vector<FlowGraph>& gs) {
    std::vector<std::string> out;
    out.reserve(gs.size());
    for (const FlowGraph& g : gs) out.push_back(canonical_key(g));
    return out;
}

}  // namespace

TEST_CASE("splitting vertices of chains are the interior vertices") {
    const FlowGraph f5 = nat(5);
    CHECK(chi(f5) == std::vector<int>{1, 2, 3, 4});
    CHECK(chi(nat(1)).empty());
    CHECK(chi(c1()).empty());
    // Interior vertex of F2 is a splitting vertex even though its removal
    // leaves two single-vertex components.
    CHECK(chi(nat(2)) == std::vector<int>{1});
    // A cycle has no splitting vertex: both arcs keep s and t connected.
    const FlowGraph cyc = make_flow_graph(3, {Edge{0, 1}, Edge{1, 2}, Edge{2, 0}}, 0, 1);
    CHECK(chi(cyc).empty());
}

TEST_CASE("ranks partition the remaining splitting vertices") {
    const FlowGraph f5 = nat(5);
    for (int w = 1; w <= 4; ++w) {
        const RankPair r = rank(f5, w);
        CHECK(r.r_s == w - 1);
        CHECK(r.r_t == 4 - w);
    }
    CHECK_THROWS_AS(rank(f5, 0), NotASplittingVertex);
    CHECK_THROWS_AS(rank(nat(1), 1), NotASplittingVertex);
}

TEST_CASE("splitting a chain yields the two subchains") {
    const FlowGraph f5 = nat(5);
    for (int w = 1; w <= 4; ++w) {
        const SplitResult s = split_at(f5, w);
        CHECK(isomorphic(s.left, nat(w)));
        CHECK(isomorphic(s.right, nat(5 - w)));
        // Edge origins partition the chain's edges in order.
        CHECK(s.left_edge_origin.size() == static_cast<std::size_t>(w));
        CHECK(s.right_edge_origin.size() == static_cast<std::size_t>(5 - w));
    }
    CHECK_THROWS_AS(split_at(f5, 0), NotASplittingVertex);
}

TEST_CASE("loops at the cut vertex stay on the s-side") {
    // F1 + C1 + F1: chain 0 -> 1 -> 2 with a loop at the middle vertex.
    const FlowGraph a =
        make_flow_graph(3, {Edge{0, 1}, Edge{1, 1}, Edge{1, 2}}, 0, 2);
    REQUIRE(chi(a) == std::vector<int>{1});
    const SplitResult s = split_at(a, 1);
    CHECK(isomorphic(s.left, oplus_graph(nat(1), c1())));
    CHECK(isomorphic(s.right, nat(1)));
}

TEST_CASE("canonical decomposition of a chain is all F1") {
    const DecompositionSeq d = canonical_decomposition(nat(4));
    REQUIRE(d.components.size() == 5 - 1);
    for (const FlowGraph& comp : d.components) CHECK(isomorphic(comp, nat(1)));
    CHECK(isomorphic(recompose(d), nat(4)));
}

TEST_CASE("decomposition components are irreducible and recompose") {
    for (const FlowGraph& a : universe_upto(3)) {
        const DecompositionSeq d = canonical_decomposition(a);
        CHECK(d.components.size() == chi(a).size() + 1);
        for (const FlowGraph& comp : d.components)
            CHECK(is_oplus_irreducible(comp, IrreducibilityMode::SplittingVertex));
        CHECK(isomorphic(recompose(d), a));
        // Edge origins cover each edge of A exactly once.
        std::vector<int> seen(a.q(), 0);
        for (const auto& comp_edges : d.edge_origins)
            for (int id : comp_edges) ++seen[id];
        for (int id = 0; id < a.q(); ++id) CHECK(seen[id] == 1);
    }
}

TEST_CASE("sorted-cut decomposition matches the nested recursion") {
    for (const FlowGraph& a : universe_upto(3)) {
        CHECK(keys_of(canonical_decomposition(a).components) ==
              keys_of(decompose_from_the_right(a)));
    }
}

TEST_CASE("irreducibility modes agree except on loop-decorated anchors") {
    // F1 + C1 has no splitting vertex but does factor through an infinitesimal.
    const FlowGraph f1c1 = oplus_graph(nat(1), c1());
    CHECK(is_oplus_irreducible(f1c1, IrreducibilityMode::SplittingVertex));
    CHECK_FALSE(is_oplus_irreducible(f1c1, IrreducibilityMode::Definitional));
    for (const FlowGraph& a : universe_upto(2)) {
        if (canonical_key(a) == canonical_key(f1c1)) continue;
        const bool by_chi = is_oplus_irreducible(a, IrreducibilityMode::SplittingVertex);
        const bool by_def = is_oplus_irreducible(a, IrreducibilityMode::Definitional);
        if (is_s_standard(a) && is_t_standard(a)) CHECK(by_chi == by_def);
    }
}

TEST_CASE("fast standardness matches the definitional search") {
    for (const FlowGraph& a : universe_upto(3)) {
        CHECK(is_s_standard(a) == s_standard_by_search(a));
        CHECK(is_t_standard(a) == t_standard_by_search(a));
    }
}

TEST_CASE("splitting edges on the basic graphs") {
    CHECK(splitting_edges(nat(2)) == std::vector<int>{0, 1});
    CHECK(splitting_edges(c1()).empty());
    CHECK(splitting_edges(r1()) == std::vector<int>{0});
    const FlowGraph two = make_flow_graph(2, {Edge{0, 1}, Edge{0, 1}}, 0, 1);
    CHECK(splitting_edges(two).empty());
    const FlowGraph cyc = make_flow_graph(3, {Edge{0, 1}, Edge{1, 2}, Edge{2, 0}}, 0, 1);
    CHECK(splitting_edges(cyc).empty());
}
