#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "fga/fga.hpp"

using namespace fga;

TEST_CASE("oplus glues target to source with checkable injections") {
    const SumResult r = oplus(nat(3), nat(2));
    CHECK(isomorphic(r.sum, nat(5)));
    CHECK(r.sum.p() == 3 + 2 + 1);  // p_A + p_B - 1 vertices after the glue
    CHECK(r.sum.q() == 5);
    CHECK(verify_embedding(nat(3), r.sum, r.left_map, AnchorSource));
    CHECK(verify_embedding(nat(2), r.sum, r.right_map, AnchorTarget));
    // The glue vertex is shared: t of the left copy is s of the right copy.
    CHECK(r.left_map.vertex_map[nat(3).target] == r.right_map.vertex_map[nat(2).source]);
}

TEST_CASE("oplus count formulas hold on every small pair") {
    const std::vector<FlowGraph>& u = universe_upto(3);
    for (const FlowGraph& a : u)
        for (const FlowGraph& b : u) {
            const FlowGraph s = oplus_graph(a, b);
            CHECK(s.p() == a.p() + b.p() - 1);
            CHECK(s.q() == a.q() + b.q());
        }
}

TEST_CASE("trivial graph is the two-sided oplus identity") {
    for (const FlowGraph& a : universe_upto(3)) {
        CHECK(isomorphic(oplus_graph(a, nat(0)), a));
        CHECK(isomorphic(oplus_graph(nat(0), a), a));
    }
}

TEST_CASE("otimes substitutes a copy of B for every edge of A") {
    const ProductResult r = otimes(nat(2), nat(3));
    CHECK(isomorphic(r.product, nat(6)));
    CHECK(r.product.q() == 6);
    // Lambda enumerates product edges by (A edge, B edge) ascending.
    REQUIRE(r.edge_bijection.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(r.edge_bijection[i].first == i / 3);
        CHECK(r.edge_bijection[i].second == i % 3);
    }
    // Anchors: s maps through A's source, t through A's target.
    CHECK(r.product.source == r.a_vertex_image[0]);
    CHECK(r.product.target == r.a_vertex_image[2]);
    // Each copy embeds: its source/target meet A's edge endpoints.
    for (int e = 0; e < 2; ++e) {
        CHECK(r.copy_vertex_image[e][0] == r.a_vertex_image[e]);
        CHECK(r.copy_vertex_image[e][3] == r.a_vertex_image[e + 1]);
    }
}

TEST_CASE("otimes count formulas hold on every small pair") {
    const std::vector<FlowGraph>& u = universe_upto(3);
    for (const FlowGraph& a : u)
        for (const FlowGraph& b : u) {
            const FlowGraph p = otimes_graph(a, b);
            CHECK(p.q() == a.q() * b.q());
            CHECK(p.p() == otimes_expected_vertices(a, b));
        }
}

TEST_CASE("edge enumeration does not change the labeled product") {
    const FlowGraph a = make_flow_graph(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}}, 0, 2);
    const FlowGraph b = make_flow_graph(2, {Edge{0, 1}, Edge{1, 1}}, 0, 1);
    const FlowGraph reference = otimes_graph(a, b);
    std::vector<int> eta(a.q());
    std::iota(eta.begin(), eta.end(), 0);
    do {
        CHECK(otimes_with_eta(a, b, eta).product == reference);
    } while (std::next_permutation(eta.begin(), eta.end()));
}

TEST_CASE("F1 is a two-sided otimes identity; F0 is absorbing") {
    for (const FlowGraph& a : universe_upto(3)) {
        CHECK(isomorphic(otimes_graph(a, nat(1)), a));
        CHECK(isomorphic(otimes_graph(nat(1), a), a));
        CHECK(isomorphic(otimes_graph(a, nat(0)), nat(0)));
        CHECK(isomorphic(otimes_graph(nat(0), a), nat(0)));
    }
}

TEST_CASE("C1 absorbs itself: the identity is not unique on infinitesimals") {
    CHECK(isomorphic(otimes_graph(c1(), c1()), c1()));
    CHECK_FALSE(isomorphic(c1(), nat(1)));
}

TEST_CASE("the reversal unit R1 inverts itself and reverses operands") {
    CHECK(is_otimes_unit(nat(1)));
    CHECK(is_otimes_unit(r1()));
    CHECK_FALSE(is_otimes_unit(c1()));
    CHECK_FALSE(is_otimes_unit(nat(2)));
    CHECK(isomorphic(otimes_graph(r1(), r1()), nat(1)));
    // R1 * A swaps the anchors of A.
    const FlowGraph a = make_flow_graph(3, {Edge{0, 1}, Edge{1, 2}, Edge{1, 1}}, 0, 2);
    const FlowGraph swapped = make_flow_graph(3, {Edge{0, 1}, Edge{1, 2}, Edge{1, 1}}, 2, 0);
    CHECK(isomorphic(otimes_graph(r1(), a), swapped));
    // A * R1 reverses every edge of A.
    const FlowGraph reversed = make_flow_graph(3, {Edge{1, 0}, Edge{2, 1}, Edge{1, 1}}, 0, 2);
    CHECK(isomorphic(otimes_graph(a, r1()), reversed));
}

TEST_CASE("scalar operations reduce to folded sums and products") {
    const FlowGraph a = make_flow_graph(2, {Edge{0, 1}, Edge{0, 1}}, 0, 1);
    CHECK_THROWS_AS(scalar_multiple(0, a), DomainError);
    CHECK_THROWS_AS(scalar_power(a, 0), DomainError);
    CHECK(isomorphic(scalar_multiple(1, a), a));
    CHECK(isomorphic(scalar_multiple(3, a), oplus_graph(oplus_graph(a, a), a)));
    CHECK(isomorphic(scalar_power(a, 3), otimes_graph(otimes_graph(a, a), a)));
    CHECK(isomorphic(scalar_multiple(4, nat(1)), nat(4)));
    CHECK(isomorphic(scalar_power(nat(2), 3), nat(8)));
}

TEST_CASE("associativity and distributivity spot checks") {
    const FlowGraph cyc = make_flow_graph(3, {Edge{0, 1}, Edge{1, 2}, Edge{2, 0}}, 0, 1);
    const FlowGraph two = make_flow_graph(2, {Edge{0, 1}, Edge{0, 1}}, 0, 1);
    CHECK(isomorphic(oplus_graph(oplus_graph(cyc, two), c1()),
                     oplus_graph(cyc, oplus_graph(two, c1()))));
    CHECK(isomorphic(otimes_graph(otimes_graph(cyc, two), c1()),
                     otimes_graph(cyc, otimes_graph(two, c1()))));
    // Right distributivity holds...
    CHECK(isomorphic(otimes_graph(oplus_graph(cyc, two), c1()),
                     oplus_graph(otimes_graph(cyc, c1()), otimes_graph(two, c1()))));
    // ...left distributivity fails at the named instance.
    const FlowGraph f1f1 = oplus_graph(nat(1), nat(1));
    CHECK_FALSE(isomorphic(otimes_graph(cyc, f1f1),
                           oplus_graph(otimes_graph(cyc, nat(1)), otimes_graph(cyc, nat(1)))));
    // Non-commutativity at the named instance.
    CHECK_FALSE(isomorphic(oplus_graph(cyc, nat(2)), oplus_graph(nat(2), cyc)));
    CHECK_FALSE(isomorphic(otimes_graph(cyc, nat(2)), otimes_graph(nat(2), cyc)));
}
