#include "bimo.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bimo/construction.hpp"
#include "bimo/engine.hpp"
#include "bimo/gadgets.hpp"
#include "bimo/graph.hpp"
#include "bimo/ladder.hpp"
#include "bimo/pipeline.hpp"

struct bimo_graph {
    bimo::Graph graph;
};

struct bimo_group {
    bimo::FiniteGroup group;
};

namespace {

thread_local std::string g_last_error;

bimo_status status_of(bimo::ErrorCode code) {
    using EC = bimo::ErrorCode;
    switch (code) {
        case EC::ParseError:
            return BIMO_ERR_PARSE;
        case EC::InvalidArgument:
        case EC::InvalidSpec:
        case EC::UnknownVertex:
        case EC::InvalidRadius:
        case EC::TargetTooSmall:
            return BIMO_ERR_INVALID_ARGUMENT;
        case EC::LoopEdge:
        case EC::DuplicateEdge:
        case EC::DanglingEndpoint:
            return BIMO_ERR_GRAPH;
        case EC::NotAssociative:
        case EC::NoIdentity:
        case EC::NotAGroup:
            return BIMO_ERR_ALGEBRA;
        case EC::GroupTooSmall:
        case EC::GadgetCountMismatch:
        case EC::GadgetNotRigid:
        case EC::GadgetSizeTooSmall:
        case EC::SubmonoidTooSmall:
        case EC::SubmonoidNotInGroup:
        case EC::GenerationFailed:
            return BIMO_ERR_CONSTRUCTION;
        case EC::BudgetExceeded:
        case EC::ClosureBudgetExceeded:
        case EC::OrderBudgetExceeded:
            return BIMO_ERR_BUDGET;
        case EC::Mismatch:
            return BIMO_ERR_MISMATCH;
    }
    return BIMO_ERR_INTERNAL;
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename Fn>
bimo_status guard(Fn&& fn) {
    try {
        return fn();
    } catch (const bimo::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BIMO_ERR_INTERNAL;
    }
}

nlohmann::json parse_json(const char* text) {
    if (!text) throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null input");
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw bimo::Error(bimo::ErrorCode::ParseError, e.what());
    }
}

} // namespace

extern "C" {

const char* bimo_last_error(void) { return g_last_error.c_str(); }

void bimo_string_free(char* text) { std::free(text); }

bimo_status bimo_graph_from_text(const char* text, bimo_graph** out) {
    return guard([&]() {
        if (!text || !out)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        *out = new bimo_graph{bimo::Graph::deserialize(text)};
        return BIMO_OK;
    });
}

void bimo_graph_free(bimo_graph* graph) { delete graph; }

bimo_status bimo_graph_to_json(const bimo_graph* graph, char** out) {
    return guard([&]() {
        if (!graph || !out)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        *out = copy_string(graph->graph.serialize("json"));
        return BIMO_OK;
    });
}

bimo_status bimo_graph_to_dot(const bimo_graph* graph, char** out) {
    return guard([&]() {
        if (!graph || !out)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        *out = copy_string(graph->graph.serialize("dot"));
        return BIMO_OK;
    });
}

bimo_status bimo_group_from_json(const char* table_json, bimo_group** out) {
    return guard([&]() {
        if (!out) throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null output");
        auto table = bimo::table_from_json(parse_json(table_json));
        *out = new bimo_group{bimo::group_from_table(table)};
        return BIMO_OK;
    });
}

bimo_status bimo_group_from_generators(const char* lines, int points, bimo_group** out) {
    return guard([&]() {
        if (!lines || !out)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        std::vector<std::vector<int>> gens;
        std::string text(lines), line;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                gens.push_back(bimo::parse_permutation(line, points));
            if (nl == std::string::npos) break;
            pos = nl + 1;
        }
        *out = new bimo_group{bimo::group_from_permutation_generators(gens)};
        return BIMO_OK;
    });
}

void bimo_group_free(bimo_group* group) { delete group; }

bimo_status bimo_algebra_report(const char* table_json, char** report_json) {
    return guard([&]() {
        if (!report_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null output");
        auto table = bimo::table_from_json(parse_json(table_json));
        nlohmann::ordered_json report;
        report["order"] = table.size();
        try {
            bimo::FiniteMonoid m = bimo::monoid_from_table(table);
            report["monoid"] = true;
            report["identity"] = m.identity;
            report["cancellative"] = bimo::is_cancellative(m);
            report["ore_condition"] = bimo::check_ore_condition(m);
            try {
                bimo::group_from_table(table);
                report["group"] = true;
            } catch (const bimo::Error& e) {
                report["group"] = false;
                report["group_error"] = e.what();
            }
        } catch (const bimo::Error& e) {
            report["monoid"] = false;
            report["monoid_error"] = e.what();
        }
        *report_json = copy_string(report.dump(2) + "\n");
        return BIMO_OK;
    });
}

bimo_status bimo_submonoid_closure(const bimo_group* group, const char* seed_csv,
                                   char** elements_json) {
    return guard([&]() {
        if (!group || !seed_csv || !elements_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        auto sub = bimo::submonoid_closure(group->group, bimo::parse_element_list(seed_csv));
        nlohmann::ordered_json j;
        j["elements"] = sub.elements;
        j["is_whole_group"] = sub.elements.size() == static_cast<std::size_t>(group->group.order);
        *elements_json = copy_string(j.dump(2) + "\n");
        return BIMO_OK;
    });
}

bimo_status bimo_gadget_family(int count, int min_size, char** family_json) {
    return guard([&]() {
        if (!family_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null output");
        auto family = bimo::default_gadget_family(count, min_size);
        nlohmann::ordered_json j;
        j["gadgets"] = nlohmann::ordered_json::array();
        for (const auto& gadget : family) {
            nlohmann::ordered_json entry;
            entry["size"] = gadget.size();
            entry["p"] = gadget.p;
            entry["q"] = gadget.q;
            entry["spec"] = gadget.spec.to_json();
            entry["graph"] = gadget.graph.to_json();
            j["gadgets"].push_back(std::move(entry));
        }
        *family_json = copy_string(j.dump(2) + "\n");
        return BIMO_OK;
    });
}

bimo_status bimo_build_cayley(const bimo_group* group, int min_gadget_size,
                              char** gamma_json) {
    return guard([&]() {
        if (!group || !gamma_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        int min_size = min_gadget_size > 0 ? min_gadget_size : group->group.order;
        auto gadgets = bimo::default_gadget_family(group->group.order - 1, min_size);
        auto gamma = bimo::build_modified_cayley(group->group, gadgets);
        *gamma_json = copy_string(gamma.to_json().dump(2) + "\n");
        return BIMO_OK;
    });
}

bimo_status bimo_build_top_layer(const char* gamma_json, const char* submonoid_csv,
                                 char** gamma_star_json) {
    return guard([&]() {
        if (!gamma_json || !submonoid_csv || !gamma_star_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        auto gamma = bimo::ModifiedCayleyGraph::from_json(parse_json(gamma_json));
        auto sub =
            bimo::submonoid_closure(gamma.group, bimo::parse_element_list(submonoid_csv));
        auto gamma_star = bimo::build_top_layer(gamma, sub);
        *gamma_star_json = copy_string(gamma_star.to_json().dump(2) + "\n");
        return BIMO_OK;
    });
}

bimo_status bimo_ladder_graph(int radius, bimo_graph** out) {
    return guard([&]() {
        if (!out) throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null output");
        *out = new bimo_graph{bimo::build_ladder_window(radius).graph};
        return BIMO_OK;
    });
}

bimo_status bimo_enumerate_maps(const bimo_graph* graph, const bimo_graph* target_or_null,
                                const char* mode, int budget_vertices, int oracle,
                                char** certificate_json) {
    return guard([&]() {
        if (!graph || !mode || !certificate_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        std::string mode_text(mode);
        bimo::SearchBudget budget;
        if (budget_vertices > 0) budget.vertices = budget_vertices;

        const bimo::Graph& g = graph->graph;
        const bimo::Graph& h = target_or_null ? target_or_null->graph : graph->graph;

        nlohmann::ordered_json cert;
        cert["mode"] = mode_text;
        std::vector<bimo::VertexImages> maps;
        if (mode_text == "bi") {
            maps = bimo::enumerate_bimorphisms(g, budget);
        } else if (mode_text == "aut") {
            maps = bimo::enumerate_automorphisms(g, budget);
        } else if (mode_text == "mono") {
            maps = bimo::enumerate_monomorphisms(g, h, budget);
        } else {
            throw bimo::Error(bimo::ErrorCode::InvalidArgument,
                              "mode must be bi, aut, or mono");
        }
        cert["map_count"] = maps.size();
        cert["maps"] = maps;

        if (mode_text != "mono" || target_or_null == nullptr) {
            auto monoid = bimo::monoid_closure(maps, budget);
            cert["composition_table"] = monoid.table;
            cert["identity"] = monoid.identity;
            cert["closed"] = monoid.elements.size() == maps.size();
            if (mode_text == "bi")
                cert["bi_equals_aut"] = maps == bimo::enumerate_automorphisms(g, budget);
        }
        if (oracle) {
            if (std::max(g.vertex_count(), h.vertex_count()) > 8)
                throw bimo::Error(bimo::ErrorCode::InvalidArgument,
                                  "oracle cross-check needs <= 8 vertices");
            auto brute_mode = mode_text == "bi"    ? bimo::MapMode::BijectiveHom
                              : mode_text == "aut" ? bimo::MapMode::Isomorphism
                                                   : bimo::MapMode::Monomorphism;
            cert["oracle_match"] = maps == bimo::brute_force_maps(g, h, brute_mode);
        }
        *certificate_json = copy_string(cert.dump(2) + "\n");
        return BIMO_OK;
    });
}

bimo_status bimo_ladder_report(int radius, int target, int margin, char** report_json) {
    return guard([&]() {
        if (!report_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null output");
        auto report = bimo::ladder_report(radius, target, margin);
        *report_json = copy_string(report.dump(2) + "\n");
        return BIMO_OK;
    });
}

bimo_status bimo_ray_report(int length, char** report_json) {
    return guard([&]() {
        if (!report_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null output");
        auto report = bimo::verify_ray_rigid_window(length);
        *report_json = copy_string(report.to_json().dump(2) + "\n");
        return BIMO_OK;
    });
}

bimo_status bimo_verify(const char* group_table_json, const char* submonoid_csv,
                        const char* options_json, char** certificate_json) {
    return guard([&]() {
        if (!group_table_json || !submonoid_csv || !certificate_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        auto table = bimo::table_from_json(parse_json(group_table_json));
        bimo::PipelineOptions options;
        if (options_json) options = bimo::PipelineOptions::from_json(parse_json(options_json));
        auto cert = bimo::run_pipeline(table, submonoid_csv, options);
        *certificate_json = copy_string(cert.dump());
        if (!cert.passed) {
            g_last_error = "verification failed; see certificate";
            return BIMO_ERR_VERIFICATION;
        }
        return BIMO_OK;
    });
}

bimo_status bimo_replay(const char* certificate_json, char** report_json) {
    return guard([&]() {
        if (!certificate_json || !report_json)
            throw bimo::Error(bimo::ErrorCode::InvalidArgument, "null argument");
        bool passed = bimo::replay(parse_json(certificate_json));
        nlohmann::ordered_json report;
        report["replay"] = "match";
        report["passed"] = passed;
        *report_json = copy_string(report.dump(2) + "\n");
        return passed ? BIMO_OK : BIMO_ERR_VERIFICATION;
    });
}

} // extern "C"
