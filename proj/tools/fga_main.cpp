// fga: command-line surface over the flow-graph arithmetic library.
//
// Exit codes: 0 = success / predicate true, 1 = predicate false (not
// isomorphic, not ordered, not prime, no quotient, law deviation),
// 2 = usage or runtime error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fga/fga.hpp"

namespace {

fga::FlowGraph load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fga::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return fga::parse_fg(buf.str());
}

void emit(const fga::FlowGraph& g, const std::string& out_path) {
    const std::string text = fga::write_fg(g);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw fga::Error("cannot write " + out_path);
        out << text;
    }
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

void print_vertex_map(const char* name, const fga::VertexMap& m) {
    std::cout << name << " vertices:";
    for (std::size_t v = 0; v < m.vertex_map.size(); ++v)
        if (m.vertex_map[v] >= 0) std::cout << ' ' << v << "->" << m.vertex_map[v];
    std::cout << '\n' << name << " edges:";
    for (std::size_t e = 0; e < m.edge_map.size(); ++e)
        if (m.edge_map[e] >= 0) std::cout << ' ' << e << "->" << m.edge_map[e];
    std::cout << '\n';
}

nlohmann::json report_json(const fga::LawReport& r) {
    nlohmann::json j;
    j["law_id"] = r.law_id;
    j["universe"] = {{"max_edges", r.universe.max_edges},
                     {"max_vertices", r.universe.effective_max_vertices()},
                     {"st_only", r.universe.st_only},
                     {"include_infinitesimals", r.universe.include_infinitesimals}};
    j["instances_checked"] = r.instances_checked;
    j["verdict"] = fga::law_verdict_name(r.verdict);
    j["counterexample"] = r.counterexample;
    j["note"] = r.note;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"flow-graph arithmetic"};
    app.require_subcommand(1);

    std::string a_path, b_path, out_path, out_dir, law_id, json_path;
    int number = 0, scalar = 1, vertex = -1, max_edges = -1, jobs = 1, edges = 0;
    bool weak = false, strong = false, witness = false, left = false, st_only = false;

    auto* cmd_nat = app.add_subcommand("nat", "write the chain F_N");
    cmd_nat->add_option("N", number)->required()->check(CLI::NonNegativeNumber);
    cmd_nat->add_option("-o,--out", out_path);

    auto* cmd_add = app.add_subcommand("add", "concatenation A+B");
    cmd_add->add_option("A", a_path)->required();
    cmd_add->add_option("B", b_path)->required();
    cmd_add->add_option("-o,--out", out_path);

    auto* cmd_mul = app.add_subcommand("mul", "edge substitution A*B");
    cmd_mul->add_option("A", a_path)->required();
    cmd_mul->add_option("B", b_path)->required();
    cmd_mul->add_option("-o,--out", out_path);

    auto* cmd_smul = app.add_subcommand("smul", "scalar multiple K*A");
    cmd_smul->add_option("K", scalar)->required()->check(CLI::PositiveNumber);
    cmd_smul->add_option("A", a_path)->required();
    cmd_smul->add_option("-o,--out", out_path);

    auto* cmd_pow = app.add_subcommand("pow", "scalar power A^K");
    cmd_pow->add_option("A", a_path)->required();
    cmd_pow->add_option("K", scalar)->required()->check(CLI::PositiveNumber);
    cmd_pow->add_option("-o,--out", out_path);

    auto* cmd_iso = app.add_subcommand("iso", "flow-graph isomorphism test");
    cmd_iso->add_option("A", a_path)->required();
    cmd_iso->add_option("B", b_path)->required();

    auto* cmd_classify = app.add_subcommand("classify", "trivial / infinitesimal / general");
    cmd_classify->add_option("A", a_path)->required();

    auto* cmd_core = app.add_subcommand("core", "st-core of A");
    cmd_core->add_option("A", a_path)->required();
    cmd_core->add_option("-o,--out", out_path);

    auto* cmd_dec = app.add_subcommand("decompose", "canonical additive decomposition");
    cmd_dec->add_option("A", a_path)->required();
    cmd_dec->add_option("--out-dir", out_dir);

    auto* cmd_split = app.add_subcommand("split", "split A at a splitting vertex");
    cmd_split->add_option("A", a_path)->required();
    cmd_split->add_option("--vertex", vertex)->required();

    auto* cmd_order = app.add_subcommand("order", "weak / strong order test");
    cmd_order->add_flag("--weak", weak);
    cmd_order->add_flag("--strong", strong);
    cmd_order->add_flag("--witness", witness);
    cmd_order->add_option("A", a_path)->required();
    cmd_order->add_option("B", b_path)->required();

    auto* cmd_div = app.add_subcommand("div", "division: C with A = C*B (or A = B*C with --left)");
    cmd_div->add_option("A", a_path)->required();
    cmd_div->add_option("B", b_path)->required();
    cmd_div->add_flag("--left", left);
    cmd_div->add_option("-o,--out", out_path);

    auto* cmd_prime = app.add_subcommand("prime", "primality test");
    cmd_prime->add_option("A", a_path)->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "all classes with up to E edges");
    cmd_enum->add_option("--edges", edges)->required()->check(CLI::NonNegativeNumber);
    cmd_enum->add_flag("--st-only", st_only);
    cmd_enum->add_option("--out-dir", out_dir);

    auto* cmd_laws = app.add_subcommand("laws", "run the law suite");
    cmd_laws->add_option("--law", law_id);
    cmd_laws->add_option("--max-edges", max_edges);
    cmd_laws->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    cmd_laws->add_option("--json", json_path);

    auto* cmd_dot = app.add_subcommand("export-dot", "DOT rendering of A");
    cmd_dot->add_option("A", a_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep the documented exit contract: 0 ok, 1 predicate false, 2 error.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_nat->parsed()) {
        emit(fga::nat(number), out_path);
    } else if (cmd_add->parsed()) {
        emit(fga::oplus_graph(load(a_path), load(b_path)), out_path);
    } else if (cmd_mul->parsed()) {
        emit(fga::otimes_graph(load(a_path), load(b_path)), out_path);
    } else if (cmd_smul->parsed()) {
        emit(fga::scalar_multiple(scalar, load(a_path)), out_path);
    } else if (cmd_pow->parsed()) {
        emit(fga::scalar_power(load(a_path), scalar), out_path);
    } else if (cmd_iso->parsed()) {
        const bool ok = fga::isomorphic(load(a_path), load(b_path));
        std::cout << (ok ? "isomorphic\n" : "not isomorphic\n");
        return ok ? 0 : 1;
    } else if (cmd_classify->parsed()) {
        std::cout << fga::graph_class_name(fga::classify(load(a_path))) << '\n';
    } else if (cmd_core->parsed()) {
        emit(fga::st_core(load(a_path)), out_path);
    } else if (cmd_dec->parsed()) {
        const fga::FlowGraph a = load(a_path);
        const fga::DecompositionSeq d = fga::canonical_decomposition(a);
        std::cout << "components " << d.components.size() << '\n';
        if (out_dir.empty()) {
            for (const fga::FlowGraph& comp : d.components) std::cout << fga::write_fg(comp);
        } else {
            std::filesystem::create_directories(out_dir);
            const std::string stem = stem_of(a_path);
            for (std::size_t i = 0; i < d.components.size(); ++i) {
                char name[32];
                std::snprintf(name, sizeof name, "_%03zu.fg", i);
                emit(d.components[i], (std::filesystem::path(out_dir) / (stem + name)).string());
            }
        }
    } else if (cmd_split->parsed()) {
        const fga::SplitResult r = fga::split_at(load(a_path), vertex);
        std::cout << "# s-side\n" << fga::write_fg(r.left)
                  << "# t-side\n" << fga::write_fg(r.right);
    } else if (cmd_order->parsed()) {
        if (weak == strong) throw fga::Error("order: pass exactly one of --weak / --strong");
        const fga::FlowGraph a = load(a_path), b = load(b_path);
        if (strong) {
            const auto w = fga::strong_leq(a, b);
            std::cout << (w ? "ordered\n" : "not ordered\n");
            if (w && witness) {
                print_vertex_map("phi_s", w->phi_s);
                print_vertex_map("phi_t", w->phi_t);
            }
            return w ? 0 : 1;
        }
        const auto w = fga::weak_leq(a, b);
        std::cout << (w ? "ordered\n" : "not ordered\n");
        if (w && witness) {
            std::cout << "h1 edges:";
            for (int e : w->splitting.h1_edges) std::cout << ' ' << e;
            std::cout << "\nh2 edges:";
            for (int e : w->splitting.h2_edges) std::cout << ' ' << e;
            std::cout << '\n';
            print_vertex_map("phi1", w->phi1);
            print_vertex_map("phi2", w->phi2);
        }
        return w ? 0 : 1;
    } else if (cmd_div->parsed()) {
        const fga::FlowGraph a = load(a_path), b = load(b_path);
        const auto c = left ? fga::left_divide(a, b) : fga::right_divide(a, b);
        if (!c) {
            std::cout << "no quotient\n";
            return 1;
        }
        emit(*c, out_path);
    } else if (cmd_prime->parsed()) {
        const bool p = fga::is_prime(load(a_path));
        std::cout << (p ? "prime\n" : "not prime\n");
        return p ? 0 : 1;
    } else if (cmd_enum->parsed()) {
        fga::UniverseSpec spec;
        spec.max_edges = edges;
        spec.st_only = st_only;
        const std::vector<fga::FlowGraph> all = fga::enumerate_flow_graphs(spec);
        std::cout << "classes " << all.size() << '\n';
        if (out_dir.empty()) {
            for (std::size_t i = 0; i < all.size(); ++i)
                std::cout << "# " << i << '\n' << fga::write_fg(all[i]);
        } else {
            std::filesystem::create_directories(out_dir);
            for (std::size_t i = 0; i < all.size(); ++i) {
                char name[32];
                std::snprintf(name, sizeof name, "g_%05zu.fg", i);
                emit(all[i], (std::filesystem::path(out_dir) / name).string());
            }
        }
    } else if (cmd_laws->parsed()) {
        std::vector<std::string> ids =
            law_id.empty() ? fga::law_ids() : std::vector<std::string>{law_id};
        nlohmann::json out = nlohmann::json::array();
        bool deviation = false;
        for (const std::string& id : ids) {
            fga::UniverseSpec spec = fga::default_spec_for(id);
            if (max_edges >= 0) spec.max_edges = max_edges;
            const fga::LawReport r = fga::check_law(id, spec, jobs);
            const bool expected_fail = fga::law_catalog().at(id).expected_fail;
            const bool ok = expected_fail
                                ? r.verdict != fga::LawVerdict::CounterexampleFound
                                : r.verdict == fga::LawVerdict::Holds;
            deviation = deviation || !ok;
            std::cout << r.law_id << ' ' << fga::law_verdict_name(r.verdict) << " instances="
                      << r.instances_checked << (ok ? "" : " DEVIATION");
            if (!r.note.empty()) {
                std::string note = r.note;
                for (char& ch : note)
                    if (ch == '\n') ch = ' ';
                std::cout << " note=\"" << note << '"';
            }
            std::cout << '\n';
            for (const std::string& s : r.counterexample) std::cout << s;
            out.push_back(report_json(r));
        }
        if (!json_path.empty()) {
            std::ofstream jf(json_path, std::ios::binary);
            if (!jf) throw fga::Error("cannot write " + json_path);
            jf << out.dump(2) << '\n';
        }
        return deviation ? 1 : 0;
    } else if (cmd_dot->parsed()) {
        std::cout << fga::to_dot(load(a_path));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fga::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fga::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
