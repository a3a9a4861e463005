#include "bimo/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bimo {

namespace {

std::string path_text(const std::vector<int>& path) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "." : "") << path[i];
    os << "]";
    return os.str();
}

} // namespace

void GadgetSpec::validate() const {
    if (levels.empty()) throw Error(ErrorCode::InvalidSpec, "no levels");
    std::set<std::vector<int>> known_paths{{}};
    for (std::size_t level = 0; level < levels.size(); ++level) {
        if (levels[level].empty())
            throw Error(ErrorCode::InvalidSpec,
                        "level " + std::to_string(level + 1) + " assigns nothing");
        std::set<int> counts;
        std::set<std::vector<int>> parents;
        std::set<std::vector<int>> created;
        for (const auto& assignment : levels[level]) {
            if (assignment.count <= 0)
                throw Error(ErrorCode::InvalidSpec, "branching counts must be positive");
            if (assignment.path.size() != level)
                throw Error(ErrorCode::InvalidSpec,
                            "level " + std::to_string(level + 1) + " expects paths of length " +
                                std::to_string(level) + ", got " + path_text(assignment.path));
            if (!known_paths.count(assignment.path))
                throw Error(ErrorCode::InvalidSpec,
                            "path " + path_text(assignment.path) + " was never created");
            if (!parents.insert(assignment.path).second)
                throw Error(ErrorCode::InvalidSpec,
                            "path " + path_text(assignment.path) + " assigned twice");
            if (!counts.insert(assignment.count).second)
                throw Error(ErrorCode::InvalidSpec,
                            "branching count " + std::to_string(assignment.count) +
                                " repeated within level " + std::to_string(level + 1));
            for (int i = 0; i < assignment.count; ++i) {
                auto child = assignment.path;
                child.push_back(i);
                created.insert(std::move(child));
            }
        }
        known_paths = std::move(created);
    }
}

int GadgetSpec::vertex_count() const {
    int n = 2;
    for (const auto& level : levels)
        for (const auto& assignment : level) n += assignment.count;
    return n;
}

nlohmann::ordered_json GadgetSpec::to_json() const {
    nlohmann::ordered_json j;
    j["levels"] = nlohmann::ordered_json::array();
    for (const auto& level : levels) {
        nlohmann::ordered_json jl = nlohmann::ordered_json::array();
        for (const auto& assignment : level) {
            nlohmann::ordered_json ja;
            ja["path"] = assignment.path;
            ja["count"] = assignment.count;
            jl.push_back(std::move(ja));
        }
        j["levels"].push_back(std::move(jl));
    }
    return j;
}

GadgetSpec GadgetSpec::from_json(const nlohmann::json& j) {
    GadgetSpec spec;
    try {
        for (const auto& jl : j.at("levels")) {
            std::vector<Assignment> level;
            for (const auto& ja : jl) {
                Assignment a;
                a.path = ja.at("path").get<std::vector<int>>();
                a.count = ja.at("count").get<int>();
                level.push_back(std::move(a));
            }
            spec.levels.push_back(std::move(level));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return spec;
}

Gadget build_gadget(const GadgetSpec& spec) {
    spec.validate();

    std::vector<VertexRole> roles;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<std::vector<int>, VertexId> vertex_at;

    roles.push_back(VertexRole::gadget_vertex(-1, -1, {-1})); // p
    roles.push_back(VertexRole::gadget_vertex(-1, -1, {}));   // q
    vertex_at[{}] = 1;
    edges.emplace_back(0, 1);

    for (const auto& level : spec.levels)
        for (const auto& assignment : level) {
            VertexId parent = vertex_at.at(assignment.path);
            for (int i = 0; i < assignment.count; ++i) {
                auto path = assignment.path;
                path.push_back(i);
                VertexId child = static_cast<VertexId>(roles.size());
                roles.push_back(VertexRole::gadget_vertex(-1, -1, path));
                vertex_at[std::move(path)] = child;
                edges.emplace_back(parent, child);
            }
        }

    Gadget gadget;
    gadget.graph = Graph::build(std::move(roles), std::move(edges));
    gadget.p = 0;
    gadget.q = 1;
    gadget.spec = spec;
    return gadget;
}

bool verify_rigid(const Gadget& gadget) {
    return enumerate_automorphisms(gadget.graph).size() == 1;
}

bool verify_bimorphism_rigid(const Gadget& gadget) {
    return enumerate_bimorphisms(gadget.graph).size() == 1;
}

namespace {

// Canonical candidate of a given size: a chain hanging off q with a single
// two-way fork at fork_level, i.e. a path with one extra leaf. Needs
// size >= fork_level + 5.
GadgetSpec fork_chain_spec(int size, int fork_level) {
    GadgetSpec spec;
    int depth = size - 3;
    std::vector<int> path;
    for (int level = 1; level <= depth; ++level) {
        GadgetSpec::Assignment a;
        a.path = path;
        a.count = (level == fork_level) ? 2 : 1;
        spec.levels.push_back({a});
        path.push_back(0);
    }
    return spec;
}

} // namespace

std::vector<Gadget> default_gadget_family(int k, int min_size) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 1");
    std::vector<Gadget> family;
    int size = std::max(7, min_size + 1); // no asymmetric tree has < 7 vertices
    while (static_cast<int>(family.size()) < k) {
        bool found = false;
        for (int fork_level = 2; fork_level + 5 <= size && !found; ++fork_level) {
            Gadget candidate = build_gadget(fork_chain_spec(size, fork_level));
            if (verify_rigid(candidate)) {
                family.push_back(std::move(candidate));
                found = true;
            }
        }
        if (!found)
            throw Error(ErrorCode::GenerationFailed,
                        "no rigid spec of size " + std::to_string(size));
        ++size;
    }
    // belt and braces: distinct sizes already force non-isomorphism
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (find_isomorphism(family[i].graph, family[j].graph))
                throw Error(ErrorCode::GenerationFailed, "family members isomorphic");
    return family;
}

bool check_bimorphism_equivalent(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) return false;
    return find_bijective_homomorphism(g, h).has_value() &&
           find_bijective_homomorphism(h, g).has_value();
}

} // namespace bimo
