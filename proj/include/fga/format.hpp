#ifndef FGA_FORMAT_HPP
#define FGA_FORMAT_HPP

// `.fg` text serialization and DOT export.
//
//   fg 1        format version
//   v <n>       vertex count
//   s <i>       source index
//   t <j>       target index
//   e <u> <v>   one line per directed edge
//
// `#` starts a comment, blank lines are ignored, LF endings, ASCII decimal.
// The writer emits edges sorted by (tail, head), so write∘parse∘write is
// byte-stable.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "fga/errors.hpp"
#include "fga/flow_graph.hpp"

namespace fga {

inline std::string write_fg(const FlowGraph& a) {
    std::vector<Edge> sorted = a.edges;
    std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) {
        return x.tail != y.tail ? x.tail < y.tail : x.head < y.head;
    });
    std::ostringstream out;
    out << "fg 1\n";
    out << "v " << a.vertex_count << "\n";
    out << "s " << a.source << "\n";
    out << "t " << a.target << "\n";
    for (const Edge& e : sorted) out << "e " << e.tail << " " << e.head << "\n";
    return out.str();
}

inline FlowGraph parse_fg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int vertex_count = -1, source = -1, target = -1;
    std::vector<Edge> edges;
    int stage = 0;  // expected next header: 0=fg 1=v 2=s 3=t 4=edges

    auto parse_int = [&](std::istringstream& ls, const char* what) {
        long long v;
        if (!(ls >> v) || v < 0)
            throw FormatError(std::string("expected nonnegative integer for ") + what, line_no);
        return static_cast<int>(v);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            throw FormatError("CR line ending not permitted", line_no);
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank (or comment-only) line
        if (tag == "fg") {
            if (stage != 0) throw FormatError("unexpected 'fg' line", line_no);
            if (parse_int(ls, "format version") != 1)
                throw FormatError("unsupported format version", line_no);
            stage = 1;
        } else if (tag == "v") {
            if (stage != 1) throw FormatError("unexpected 'v' line", line_no);
            vertex_count = parse_int(ls, "vertex count");
            stage = 2;
        } else if (tag == "s") {
            if (stage != 2) throw FormatError("unexpected 's' line", line_no);
            source = parse_int(ls, "source");
            stage = 3;
        } else if (tag == "t") {
            if (stage != 3) throw FormatError("unexpected 't' line", line_no);
            target = parse_int(ls, "target");
            stage = 4;
        } else if (tag == "e") {
            if (stage != 4) throw FormatError("unexpected 'e' line", line_no);
            const int u = parse_int(ls, "edge tail");
            const int v = parse_int(ls, "edge head");
            edges.push_back(Edge{u, v});
        } else {
            throw FormatError("unknown line tag '" + tag + "'", line_no);
        }
        std::string extra;
        if (ls >> extra) throw FormatError("trailing tokens", line_no);
    }
    if (stage != 4) throw FormatError("incomplete header", line_no);
    try {
        return make_flow_graph(vertex_count, std::move(edges), source, target);
    } catch (const ValidationError& e) {
        throw FormatError(e.what(), line_no);
    }
}

// DOT export, for human inspection only.
inline std::string to_dot(const FlowGraph& a, const std::string& name = "fg") {
    std::vector<Edge> sorted = a.edges;
    std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) {
        return x.tail != y.tail ? x.tail < y.tail : x.head < y.head;
    });
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < a.vertex_count; ++v) {
        out << "  n" << v;
        if (v == a.source && v == a.target)
            out << " [label=\"s=t\"]";
        else if (v == a.source)
            out << " [label=\"s\"]";
        else if (v == a.target)
            out << " [label=\"t\"]";
        else
            out << " [label=\"" << v << "\"]";
        out << ";\n";
    }
    for (const Edge& e : sorted) out << "  n" << e.tail << " -> n" << e.head << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace fga

#endif  // FGA_FORMAT_HPP
