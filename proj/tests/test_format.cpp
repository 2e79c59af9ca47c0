#include "doctest.h"

#include <string>

#include "fga/fga.hpp"

using namespace fga;

TEST_CASE("write_fg emits the documented layout with sorted edges") {
    const FlowGraph a = make_flow_graph(3, {Edge{2, 1}, Edge{0, 1}, Edge{1, 2}}, 0, 2);
    CHECK(write_fg(a) ==
          "fg 1\n"
          "v 3\n"
          "s 0\n"
          "t 2\n"
          "e 0 1\n"
          "e 1 2\n"
          "e 2 1\n");
    CHECK(write_fg(nat(0)) == "fg 1\nv 1\ns 0\nt 0\n");
}

TEST_CASE("parse accepts comments and blank lines") {
    const FlowGraph a = parse_fg(
        "# a loop with an exit\n"
        "fg 1\n"
        "\n"
        "v 2\n"
        "s 0\n"
        "t 1\n"
        "e 0 0  # loop\n"
        "e 0 1\n");
    CHECK(a.p() == 2);
    CHECK(a.q() == 2);
    CHECK(a.source == 0);
    CHECK(a.target == 1);
}

TEST_CASE("parse rejects malformed input with line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_fg(text);
        } catch (const FormatError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("fg 2\nv 1\ns 0\nt 0\n") == 1);                    // bad version
    CHECK(line_of("v 1\ns 0\nt 0\n") == 1);                          // missing header
    CHECK(line_of("fg 1\nv 0\ns 0\nt 0\n") == 4);                    // no vertices
    CHECK(line_of("fg 1\nv 1\ns 1\nt 0\n") == 4);                    // anchor out of range
    CHECK(line_of("fg 1\nv 2\ns 0\nt 1\ne 0 2\n") == 5);             // endpoint out of range
    CHECK(line_of("fg 1\nv 1\ns 0\nt 0 extra\n") == 4);              // trailing tokens
    CHECK(line_of("fg 1\r\nv 1\ns 0\nt 0\n") == 1);                  // CR line ending
    CHECK(line_of("fg 1\nv 3\ns 0\nt 2\ne 0 1\n") == 5);             // disconnected
    CHECK(line_of("fg 1\nv 1\nt 0\ns 0\n") == 3);                    // wrong stage order
    CHECK(line_of("fg 1\nv 1\ns 0\nt 0\nx 1\n") == 5);               // unknown tag
}

TEST_CASE("round trip is the identity on every small graph") {
    for (const FlowGraph& a : universe_upto(3)) {
        const FlowGraph back = parse_fg(write_fg(a));
        CHECK(back == a);
    }
}

TEST_CASE("dot output names the anchors") {
    const std::string chain = to_dot(nat(1), "chain");
    CHECK(chain ==
          "digraph chain {\n"
          "  n0 [label=\"s\"];\n"
          "  n1 [label=\"t\"];\n"
          "  n0 -> n1;\n"
          "}\n");
    const std::string loop = to_dot(c1());
    CHECK(loop.find("label=\"s=t\"") != std::string::npos);
}
