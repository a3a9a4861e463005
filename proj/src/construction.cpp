#include "bimo/construction.hpp"

#include <algorithm>
#include <set>

namespace bimo {

VertexId ModifiedCayleyGraph::group_vertex(int g) const { return g; }

int ModifiedCayleyGraph::block_start(int g, int a_rank) const {
    int width = 1 + gadgets[a_rank].size();
    return block_offsets_[a_rank] + g * width;
}

VertexId ModifiedCayleyGraph::connector_vertex(int g, int a_rank) const {
    return block_start(g, a_rank);
}

std::vector<VertexId> ModifiedCayleyGraph::block(int g, int a_rank) const {
    std::vector<VertexId> vs(gadgets[a_rank].size());
    int base = block_start(g, a_rank) + 1;
    for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = base + static_cast<int>(i);
    return vs;
}

VertexId ModifiedCayleyGraph::block_p(int g, int a_rank) const {
    return block_start(g, a_rank) + 1 + gadgets[a_rank].p;
}

ModifiedCayleyGraph build_modified_cayley(const FiniteGroup& group,
                                          const std::vector<Gadget>& gadgets_in) {
    const int n = group.order;
    if (n <= 3)
        throw Error(ErrorCode::GroupTooSmall, "|G| = " + std::to_string(n) + ", need > 3");
    if (static_cast<int>(gadgets_in.size()) != n - 1)
        throw Error(ErrorCode::GadgetCountMismatch,
                    "need |G|-1 = " + std::to_string(n - 1) + " gadgets, got " +
                        std::to_string(gadgets_in.size()));

    std::vector<Gadget> gadgets = gadgets_in;
    std::sort(gadgets.begin(), gadgets.end(),
              [](const Gadget& x, const Gadget& y) { return x.size() < y.size(); });
    std::set<int> sizes;
    for (const auto& gadget : gadgets) {
        if (gadget.size() <= n)
            throw Error(ErrorCode::GadgetSizeTooSmall,
                        "gadget size " + std::to_string(gadget.size()) + " must exceed |G| = " +
                            std::to_string(n));
        if (!sizes.insert(gadget.size()).second)
            throw Error(ErrorCode::GadgetSizeTooSmall,
                        "gadget sizes must be pairwise distinct, size " +
                            std::to_string(gadget.size()) + " repeated");
        if (!verify_rigid(gadget))
            throw Error(ErrorCode::GadgetNotRigid,
                        "gadget of size " + std::to_string(gadget.size()) +
                            " has a non-trivial automorphism");
    }

    ModifiedCayleyGraph out;
    out.group = group;
    for (int x = 0; x < n; ++x)
        if (x != group.identity) out.generators.push_back(x);
    out.gadgets = std::move(gadgets);

    std::vector<VertexRole> roles;
    for (int g = 0; g < n; ++g) roles.push_back(VertexRole::group_elem(g));
    out.block_offsets_.resize(out.generators.size());
    for (std::size_t r = 0; r < out.generators.size(); ++r) {
        out.block_offsets_[r] = static_cast<int>(roles.size());
        int a = out.generators[r];
        const Gadget& gadget = out.gadgets[r];
        for (int g = 0; g < n; ++g) {
            roles.push_back(VertexRole::connector(g, a));
            for (int v = 0; v < gadget.size(); ++v)
                roles.push_back(
                    VertexRole::gadget_vertex(g, a, gadget.graph.role(v).path));
        }
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t r = 0; r < out.generators.size(); ++r) {
        int a = out.generators[r];
        const Gadget& gadget = out.gadgets[r];
        for (int g = 0; g < n; ++g) {
            VertexId conn = out.block_offsets_[r] + g * (1 + gadget.size());
            VertexId block_base = conn + 1;
            VertexId p = block_base + gadget.p;
            edges.emplace_back(g, conn);                       // {g, (g,a)}
            edges.emplace_back(conn, p);                       // {(g,a), (g,p_a)}
            edges.emplace_back(p, group.product(g, a));        // {(g,p_a), ga}
            for (const auto& [u, v] : gadget.graph.edges())    // edges of R_a
                edges.emplace_back(block_base + u, block_base + v);
        }
    }
    out.graph = Graph::build(std::move(roles), std::move(edges));
    return out;
}

nlohmann::ordered_json ModifiedCayleyGraph::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = "modified_cayley";
    j["group"] = group.table;
    nlohmann::ordered_json specs = nlohmann::ordered_json::array();
    nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
    for (const auto& gadget : gadgets) {
        specs.push_back(gadget.spec.to_json());
        sizes.push_back(gadget.size());
    }
    j["gadget_specs"] = std::move(specs);
    j["gadget_sizes"] = std::move(sizes);
    j["graph"] = graph.to_json();
    return j;
}

ModifiedCayleyGraph ModifiedCayleyGraph::from_json(const nlohmann::json& j) {
    try {
        if (j.at("kind").get<std::string>() != "modified_cayley")
            throw Error(ErrorCode::ParseError, "expected a modified_cayley document");
        FiniteGroup group = group_from_table(table_from_json(j.at("group")));
        std::vector<Gadget> gadgets;
        for (const auto& js : j.at("gadget_specs"))
            gadgets.push_back(build_gadget(GadgetSpec::from_json(js)));
        ModifiedCayleyGraph rebuilt = build_modified_cayley(group, gadgets);
        if (!(rebuilt.graph == Graph::from_json(j.at("graph"))))
            throw Error(ErrorCode::Mismatch,
                        "stored graph differs from the one its inputs rebuild");
        return rebuilt;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

// ---------------------------------------------------------------------------
// Top layer

VertexId TopLayerGraph::bullet_vertex(int g) const {
    return base.graph.vertex_count() + g;
}

namespace detail {

TopLayerGraph build_top_layer_unchecked(const ModifiedCayleyGraph& base,
                                        const std::vector<int>& submonoid_elements) {
    const int n = base.group.order;
    for (int x : submonoid_elements)
        if (x < 0 || x >= n)
            throw Error(ErrorCode::SubmonoidNotInGroup,
                        "element " + std::to_string(x) + " outside the group");

    TopLayerGraph out;
    out.base = base;
    out.submonoid_elements = submonoid_elements;
    std::sort(out.submonoid_elements.begin(), out.submonoid_elements.end());

    std::vector<VertexRole> roles = base.graph.roles();
    std::vector<std::pair<VertexId, VertexId>> edges = base.graph.edges();
    const int bullet_base = base.graph.vertex_count();
    for (int g = 0; g < n; ++g) {
        roles.push_back(VertexRole::bullet(g));
        edges.emplace_back(g, bullet_base + g);
    }
    const auto& B = out.submonoid_elements;
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j)
            edges.emplace_back(bullet_base + B[i], bullet_base + B[j]);
    out.graph = Graph::build(std::move(roles), std::move(edges));
    return out;
}

} // namespace detail

TopLayerGraph build_top_layer(const ModifiedCayleyGraph& base, const Submonoid& submonoid) {
    if (submonoid.parent.table != base.group.table)
        throw Error(ErrorCode::SubmonoidNotInGroup,
                    "submonoid belongs to a different group");
    if (submonoid.elements.size() < 2)
        throw Error(ErrorCode::SubmonoidTooSmall,
                    "|B| = " + std::to_string(submonoid.elements.size()) + ", need >= 2");
    return detail::build_top_layer_unchecked(base, submonoid.elements);
}

nlohmann::ordered_json TopLayerGraph::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = "top_layer";
    j["base"] = base.to_json();
    j["submonoid"] = submonoid_elements;
    j["graph"] = graph.to_json();
    return j;
}

TopLayerGraph TopLayerGraph::from_json(const nlohmann::json& j) {
    try {
        if (j.at("kind").get<std::string>() != "top_layer")
            throw Error(ErrorCode::ParseError, "expected a top_layer document");
        ModifiedCayleyGraph base = ModifiedCayleyGraph::from_json(j.at("base"));
        Submonoid sub =
            submonoid_closure(base.group, j.at("submonoid").get<std::vector<int>>());
        TopLayerGraph rebuilt = build_top_layer(base, sub);
        if (!(rebuilt.graph == Graph::from_json(j.at("graph"))))
            throw Error(ErrorCode::Mismatch,
                        "stored graph differs from the one its inputs rebuild");
        return rebuilt;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

// ---------------------------------------------------------------------------
// Degree profile

nlohmann::ordered_json DegreeProfile::to_json() const {
    nlohmann::ordered_json j;
    j["group_min_degree"] = group_min_degree;
    j["group_max_degree"] = group_max_degree;
    j["connector_degrees"] = connector_degrees;
    j["p_degrees"] = p_degrees;
    j["bullet_degrees_inside"] = bullet_degrees_inside;
    j["bullet_degrees_outside"] = bullet_degrees_outside;
    return j;
}

DegreeProfile degree_profile(const Graph& graph, const std::vector<int>& submonoid_elements) {
    DegreeProfile out;
    std::set<int> conn, p, inside, outside;
    std::set<int> B(submonoid_elements.begin(), submonoid_elements.end());
    bool any_group = false;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const auto& role = graph.role(v);
        int d = graph.degree(v);
        switch (role.kind) {
            case VertexRole::Kind::GroupElem:
                if (!any_group) {
                    out.group_min_degree = out.group_max_degree = d;
                    any_group = true;
                } else {
                    out.group_min_degree = std::min(out.group_min_degree, d);
                    out.group_max_degree = std::max(out.group_max_degree, d);
                }
                break;
            case VertexRole::Kind::Connector:
                conn.insert(d);
                break;
            case VertexRole::Kind::GadgetVertex:
                if (role.path == std::vector<int>{-1}) p.insert(d);
                break;
            case VertexRole::Kind::Bullet:
                (B.count(role.g) ? inside : outside).insert(d);
                break;
            case VertexRole::Kind::Plain:
                break;
        }
    }
    out.connector_degrees.assign(conn.begin(), conn.end());
    out.p_degrees.assign(p.begin(), p.end());
    out.bullet_degrees_inside.assign(inside.begin(), inside.end());
    out.bullet_degrees_outside.assign(outside.begin(), outside.end());
    return out;
}

} // namespace bimo
