#include "bimo/pipeline.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "bimo/construction.hpp"
#include "bimo/gadgets.hpp"

namespace bimo {

nlohmann::ordered_json PipelineOptions::to_json() const {
    nlohmann::ordered_json j;
    j["min_gadget_size"] = min_gadget_size;
    j["budget_vertices"] = budget_vertices;
    j["budget_closure"] = budget_closure;
    j["oracle"] = oracle;
    return j;
}

PipelineOptions PipelineOptions::from_json(const nlohmann::json& j) {
    PipelineOptions o;
    try {
        o.min_gadget_size = j.at("min_gadget_size").get<int>();
        o.budget_vertices = j.at("budget_vertices").get<int>();
        o.budget_closure = j.at("budget_closure").get<long long>();
        o.oracle = j.at("oracle").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return o;
}

std::string digest(const nlohmann::json& j) {
    const std::string text = j.dump();
    unsigned long long hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

std::vector<int> parse_element_list(const std::string& spec) {
    std::vector<int> out;
    std::string token;
    std::istringstream is(spec);
    while (std::getline(is, token, ',')) {
        auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto last = token.find_last_not_of(" \t");
        try {
            out.push_back(std::stoi(token.substr(first, last - first + 1)));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad element '" + token + "'");
        }
    }
    return out;
}

namespace {

// deterministic small-graph corpus for the --oracle self-check
Graph random_small_graph(std::mt19937& rng, int n, double p) {
    std::vector<VertexRole> roles(n, VertexRole::plain());
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::build(std::move(roles), std::move(edges));
}

bool oracle_self_check() {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 12; ++i) {
        int n = 3 + static_cast<int>(rng() % 6); // 3..8 vertices
        double p = (i % 3 == 0) ? 0.3 : (i % 3 == 1) ? 0.5 : 0.7;
        Graph g = random_small_graph(rng, n, p);
        if (enumerate_bimorphisms(g) != brute_force_maps(g, g, MapMode::BijectiveHom))
            return false;
        if (enumerate_automorphisms(g) != brute_force_maps(g, g, MapMode::Isomorphism))
            return false;
    }
    return true;
}

} // namespace

VerificationCertificate run_pipeline(const std::vector<std::vector<int>>& group_table,
                                     const std::string& submonoid_spec,
                                     const PipelineOptions& options) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();

    VerificationCertificate cert;
    auto& doc = cert.document;
    doc["format"] = "bimo-cert-1";
    doc["inputs"]["group_table"] = group_table;
    doc["inputs"]["group_digest"] = digest(nlohmann::json(group_table));
    doc["inputs"]["submonoid_spec"] = submonoid_spec;
    doc["options"] = options.to_json();
    doc["passed"] = false;

    try {
        FiniteGroup group = group_from_table(group_table);
        std::vector<int> seed = parse_element_list(submonoid_spec);
        Submonoid sub = submonoid_closure(group, seed);
        doc["inputs"]["submonoid"] = sub.elements;
        if (group.order <= 3)
            throw Error(ErrorCode::GroupTooSmall,
                        "|G| = " + std::to_string(group.order) + ", need > 3");
        if (sub.elements.size() < 2)
            throw Error(ErrorCode::SubmonoidTooSmall,
                        "|B| = " + std::to_string(sub.elements.size()) + ", need >= 2");

        int min_size = options.min_gadget_size > 0 ? options.min_gadget_size : group.order;
        auto gadgets = default_gadget_family(group.order - 1, min_size);
        nlohmann::ordered_json gadget_specs = nlohmann::ordered_json::array();
        nlohmann::ordered_json gadget_sizes = nlohmann::ordered_json::array();
        for (const auto& gadget : gadgets) {
            gadget_specs.push_back(gadget.spec.to_json());
            gadget_sizes.push_back(gadget.size());
        }
        doc["inputs"]["gadget_specs"] = gadget_specs;
        doc["inputs"]["gadget_digest"] = digest(gadget_specs);

        ModifiedCayleyGraph gamma = build_modified_cayley(group, gadgets);
        TopLayerGraph gamma_star = build_top_layer(gamma, sub);

        SearchBudget budget;
        budget.vertices = options.budget_vertices > 0
                              ? options.budget_vertices
                              : std::max(256, gamma_star.graph.vertex_count());
        budget.closure = options.budget_closure;
        doc["budgets"]["vertices"] = budget.vertices;
        doc["budgets"]["closure"] = budget.closure;

        doc["graph_stats"]["gamma_vertices"] = gamma.graph.vertex_count();
        doc["graph_stats"]["gamma_edges"] = gamma.graph.edge_count();
        doc["graph_stats"]["gamma_star_vertices"] = gamma_star.graph.vertex_count();
        doc["graph_stats"]["gamma_star_edges"] = gamma_star.graph.edge_count();
        doc["graph_stats"]["gadget_sizes"] = gadget_sizes;

        bool oracle_ok = true;
        if (options.oracle) oracle_ok = oracle_self_check();
        doc["oracle_checked"] = options.oracle;
        doc["oracle_passed"] = oracle_ok;

        auto bims = enumerate_bimorphisms(gamma_star.graph, budget);
        doc["bimorphisms"] = bims;
        MapMonoid monoid = monoid_closure(bims, budget);
        doc["composition_table"] = monoid.table;
        doc["closure_added_nothing"] = monoid.elements.size() == bims.size();

        // target submonoid, reindexed 0..|B|-1
        const auto& B = sub.elements;
        std::vector<int> rank(group.order, -1);
        for (std::size_t i = 0; i < B.size(); ++i) rank[B[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> b_table(B.size(), std::vector<int>(B.size()));
        for (std::size_t i = 0; i < B.size(); ++i)
            for (std::size_t j = 0; j < B.size(); ++j)
                b_table[i][j] = rank[group.product(B[i], B[j])];
        FiniteMonoid b_monoid = monoid_from_table(b_table);

        auto witness = is_isomorphic_monoid(monoid.to_finite_monoid(), b_monoid);
        if (witness)
            doc["isomorphism_witness"] = *witness;
        else
            doc["isomorphism_witness"] = nullptr;

        auto action = check_regular_left_action(bims, gamma_star.graph, group, B);
        doc["clauses"] = action.to_json();

        cert.passed = oracle_ok && witness.has_value() && bims.size() == B.size() &&
                      action.passed();
        doc["passed"] = cert.passed;
    } catch (const Error& e) {
        doc["error"] = e.what();
        cert.passed = false;
    }

    auto t1 = clock::now();
    doc["wall_clock_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return cert;
}

bool replay(const nlohmann::json& certificate) {
    std::vector<std::vector<int>> table;
    std::string spec;
    PipelineOptions options;
    try {
        if (certificate.at("format").get<std::string>() != "bimo-cert-1")
            throw Error(ErrorCode::ParseError, "unknown certificate format");
        table = certificate.at("inputs").at("group_table").get<std::vector<std::vector<int>>>();
        spec = certificate.at("inputs").at("submonoid_spec").get<std::string>();
        options = PipelineOptions::from_json(certificate.at("options"));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }

    VerificationCertificate fresh = run_pipeline(table, spec, options);
    for (const auto& [key, value] : fresh.document.items()) {
        if (key == "wall_clock_ms") continue;
        if (!certificate.contains(key))
            throw Error(ErrorCode::Mismatch, "certificate lacks field '" + key + "'");
        if (certificate.at(key) != value)
            throw Error(ErrorCode::Mismatch, "field '" + key + "' differs");
    }
    return fresh.passed;
}

} // namespace bimo
