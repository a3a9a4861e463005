// bimo command-line front end. Talks to the library exclusively through the
// C API in bimo.h, the same surface other language bindings would use.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bimo.h"

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot write '" + path + "'");
    out << text;
}

// Takes ownership of the API string and returns it as std::string.
std::string adopt(char* text) {
    std::string out = text ? text : "";
    bimo_string_free(text);
    return out;
}

int fail(bimo_status status) {
    std::cerr << "error: " << bimo_last_error() << '\n';
    return static_cast<int>(status);
}

struct GraphHandle {
    bimo_graph* ptr = nullptr;
    ~GraphHandle() { bimo_graph_free(ptr); }
};

struct GroupHandle {
    bimo_group* ptr = nullptr;
    ~GroupHandle() { bimo_group_free(ptr); }
};

GroupHandle load_group(const std::string& table_file, const std::string& generators,
                       int points) {
    GroupHandle group;
    bimo_status status;
    if (!generators.empty()) {
        status = bimo_group_from_generators(generators.c_str(), points, &group.ptr);
    } else {
        status = bimo_group_from_json(read_file(table_file).c_str(), &group.ptr);
    }
    if (status != BIMO_OK) throw std::runtime_error(bimo_last_error());
    return group;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph bimorphism-monoid constructions and verification"};
    app.require_subcommand(1);

    // gadget --------------------------------------------------------------
    auto* gadget = app.add_subcommand("gadget", "generate a rigid gadget tree family");
    int gadget_count = 1, gadget_min_size = 7;
    std::string gadget_out;
    gadget->add_option("--count", gadget_count, "number of trees")->check(CLI::PositiveNumber);
    gadget->add_option("--min-size", gadget_min_size, "every tree larger than this");
    gadget->add_option("--out", gadget_out, "output file (default stdout)");

    // algebra ---------------------------------------------------------------
    auto* algebra = app.add_subcommand("algebra", "inspect monoid/group tables");
    algebra->require_subcommand(1);
    std::string algebra_table, algebra_generators, algebra_seed, algebra_out;
    int algebra_points = 0;
    auto* validate = algebra->add_subcommand(
        "validate", "report associativity, identity, cancellativity, Ore condition");
    validate->add_option("--table", algebra_table, "multiplication table JSON file")
        ->required();
    validate->add_option("--out", algebra_out, "output file (default stdout)");
    auto* closure = algebra->add_subcommand("closure", "submonoid closure inside a group");
    closure->add_option("--table", algebra_table, "group table JSON file");
    closure->add_option("--generators", algebra_generators,
                        "permutation generators, one per line ('0 2 1' or '(0 1)')");
    closure->add_option("--points", algebra_points, "points the permutations act on");
    closure->add_option("--seed", algebra_seed, "comma-separated element list")->required();
    closure->add_option("--out", algebra_out, "output file (default stdout)");

    // cayley ----------------------------------------------------------------
    auto* cayley = app.add_subcommand("cayley", "build the modified Cayley graph");
    std::string cayley_group, cayley_generators, cayley_out, cayley_min_size = "auto";
    int cayley_points = 0;
    cayley->add_option("--group", cayley_group, "group table JSON file");
    cayley->add_option("--generators", cayley_generators, "permutation generators");
    cayley->add_option("--points", cayley_points, "points the permutations act on");
    cayley->add_option("--min-gadget-size", cayley_min_size, "number or 'auto' (= |G|)");
    cayley->add_option("--out", cayley_out, "output file (default stdout)");

    // toplayer ----------------------------------------------------------------
    auto* toplayer = app.add_subcommand("toplayer", "add the bullet layer over a base graph");
    std::string top_gamma, top_submonoid, top_out;
    toplayer->add_option("--gamma", top_gamma, "base graph document")->required();
    toplayer->add_option("--submonoid", top_submonoid, "comma-separated generating elements")
        ->required();
    toplayer->add_option("--out", top_out, "output file (default stdout)");

    // bi ----------------------------------------------------------------------
    auto* bi = app.add_subcommand("bi", "enumerate bimorphisms/automorphisms/monomorphisms");
    std::string bi_graph, bi_target, bi_mode = "bi", bi_out;
    int bi_budget = 0;
    bool bi_oracle = false;
    bi->add_option("--graph", bi_graph, "graph file (JSON or DOT)")->required();
    bi->add_option("--target", bi_target, "target graph for --mode mono");
    bi->add_option("--mode", bi_mode, "bi, aut, or mono")
        ->check(CLI::IsMember({"bi", "aut", "mono"}));
    bi->add_option("--budget-vertices", bi_budget, "vertex budget (0 = default)");
    bi->add_flag("--oracle", bi_oracle, "cross-check against the brute-force path");
    bi->add_option("--out", bi_out, "output file (default stdout)");

    // ladder ----------------------------------------------------------------
    auto* ladder = app.add_subcommand("ladder", "finite-window ladder analysis");
    int ladder_radius = 0, ladder_target = 0, ladder_margin = 1, ladder_ray = 0;
    std::string ladder_out;
    ladder->add_option("--radius", ladder_radius, "source window radius");
    ladder->add_option("--target", ladder_target, "target window radius");
    ladder->add_option("--classify", ladder_margin, "interior margin for shift detection");
    ladder->add_option("--ray", ladder_ray, "instead: rigidity report for a path of n vertices");
    ladder->add_option("--out", ladder_out, "output file (default stdout)");

    // verify / replay ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "full pipeline with certificate");
    std::string verify_group, verify_submonoid, verify_out, verify_replay;
    int verify_min_size = 0, verify_budget_vertices = 0;
    long long verify_budget_closure = 20000;
    bool verify_oracle = false;
    verify->add_option("--group", verify_group, "group table JSON file");
    verify->add_option("--submonoid", verify_submonoid, "comma-separated generating elements");
    verify->add_option("--min-gadget-size", verify_min_size, "0 = auto (|G|)");
    verify->add_option("--budget-vertices", verify_budget_vertices, "0 = auto");
    verify->add_option("--budget-closure", verify_budget_closure, "closure element budget");
    verify->add_flag("--oracle", verify_oracle, "run the small-graph engine self-check first");
    verify->add_option("--replay", verify_replay, "re-derive and compare a certificate file");
    verify->add_option("--out", verify_out, "certificate file (default stdout)");

    auto* replay = app.add_subcommand("replay", "re-derive and compare a certificate");
    std::string replay_file, replay_out;
    replay->add_option("cert", replay_file, "certificate file")->required();
    replay->add_option("--out", replay_out, "output file (default stdout)");

    // export ----------------------------------------------------------------
    auto* exporter = app.add_subcommand("export", "convert a graph between JSON and DOT");
    std::string export_in, export_format = "dot", export_out;
    exporter->add_option("--graph", export_in, "graph file (JSON or DOT)")->required();
    exporter->add_option("--format", export_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    exporter->add_option("--out", export_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gadget->parsed()) {
            char* out = nullptr;
            bimo_status status = bimo_gadget_family(gadget_count, gadget_min_size, &out);
            if (status != BIMO_OK) return fail(status);
            write_output(gadget_out, adopt(out));
            return 0;
        }

        if (validate->parsed()) {
            char* out = nullptr;
            bimo_status status =
                bimo_algebra_report(read_file(algebra_table).c_str(), &out);
            if (status != BIMO_OK) return fail(status);
            write_output(algebra_out, adopt(out));
            return 0;
        }

        if (closure->parsed()) {
            GroupHandle group = load_group(algebra_table, algebra_generators, algebra_points);
            char* out = nullptr;
            bimo_status status =
                bimo_submonoid_closure(group.ptr, algebra_seed.c_str(), &out);
            if (status != BIMO_OK) return fail(status);
            write_output(algebra_out, adopt(out));
            return 0;
        }

        if (cayley->parsed()) {
            GroupHandle group = load_group(cayley_group, cayley_generators, cayley_points);
            int min_size = cayley_min_size == "auto" ? 0 : std::stoi(cayley_min_size);
            char* out = nullptr;
            bimo_status status = bimo_build_cayley(group.ptr, min_size, &out);
            if (status != BIMO_OK) return fail(status);
            write_output(cayley_out, adopt(out));
            return 0;
        }

        if (toplayer->parsed()) {
            char* out = nullptr;
            bimo_status status = bimo_build_top_layer(read_file(top_gamma).c_str(),
                                                      top_submonoid.c_str(), &out);
            if (status != BIMO_OK) return fail(status);
            write_output(top_out, adopt(out));
            return 0;
        }

        if (bi->parsed()) {
            GraphHandle graph, target;
            bimo_status status =
                bimo_graph_from_text(read_file(bi_graph).c_str(), &graph.ptr);
            if (status != BIMO_OK) return fail(status);
            if (!bi_target.empty()) {
                status = bimo_graph_from_text(read_file(bi_target).c_str(), &target.ptr);
                if (status != BIMO_OK) return fail(status);
            }
            char* out = nullptr;
            status = bimo_enumerate_maps(graph.ptr, target.ptr, bi_mode.c_str(), bi_budget,
                                         bi_oracle ? 1 : 0, &out);
            if (status != BIMO_OK) return fail(status);
            write_output(bi_out, adopt(out));
            return 0;
        }

        if (ladder->parsed()) {
            char* out = nullptr;
            bimo_status status;
            if (ladder_ray > 0) {
                status = bimo_ray_report(ladder_ray, &out);
            } else {
                if (ladder_target == 0) ladder_target = ladder_radius;
                status = bimo_ladder_report(ladder_radius, ladder_target, ladder_margin, &out);
            }
            if (status != BIMO_OK) return fail(status);
            write_output(ladder_out, adopt(out));
            return 0;
        }

        if (verify->parsed()) {
            if (!verify_replay.empty()) {
                char* out = nullptr;
                bimo_status status =
                    bimo_replay(read_file(verify_replay).c_str(), &out);
                if (status != BIMO_OK && out == nullptr) return fail(status);
                write_output(verify_out, adopt(out));
                return status == BIMO_OK ? 0 : static_cast<int>(status);
            }
            if (verify_submonoid.empty())
                throw CLI::ValidationError("--submonoid is required unless --replay is given");
            std::string table_json = read_file(verify_group);
            std::ostringstream options;
            options << "{\"min_gadget_size\":" << verify_min_size
                    << ",\"budget_vertices\":" << verify_budget_vertices
                    << ",\"budget_closure\":" << verify_budget_closure << ",\"oracle\":"
                    << (verify_oracle ? "true" : "false") << "}";
            char* out = nullptr;
            bimo_status status = bimo_verify(table_json.c_str(), verify_submonoid.c_str(),
                                             options.str().c_str(), &out);
            if (out == nullptr) return fail(status);
            write_output(verify_out, adopt(out));
            if (status == BIMO_OK) return 0;
            std::cerr << "verification failed\n";
            return static_cast<int>(status);
        }

        if (replay->parsed()) {
            char* out = nullptr;
            bimo_status status = bimo_replay(read_file(replay_file).c_str(), &out);
            if (status != BIMO_OK && out == nullptr) return fail(status);
            write_output(replay_out, adopt(out));
            return status == BIMO_OK ? 0 : static_cast<int>(status);
        }

        if (exporter->parsed()) {
            GraphHandle graph;
            bimo_status status =
                bimo_graph_from_text(read_file(export_in).c_str(), &graph.ptr);
            if (status != BIMO_OK) return fail(status);
            char* out = nullptr;
            status = export_format == "dot" ? bimo_graph_to_dot(graph.ptr, &out)
                                            : bimo_graph_to_json(graph.ptr, &out);
            if (status != BIMO_OK) return fail(status);
            write_output(export_out, adopt(out));
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
