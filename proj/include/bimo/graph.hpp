#ifndef BIMO_GRAPH_HPP
#define BIMO_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bimo/errors.hpp"

namespace bimo {

/// Dense 0-based vertex identifier.
using VertexId = int;

/// Metadata tag describing what a vertex stands for in a constructed graph.
/// Roles never influence structural searches; the graphs themselves are
/// unlabelled.
struct VertexRole {
    enum class Kind { Plain, GroupElem, Connector, GadgetVertex, Bullet };

    Kind kind = Kind::Plain;
    int g = -1;            // group-element label (GroupElem/Connector/GadgetVertex/Bullet)
    int a = -1;            // generator label (Connector/GadgetVertex)
    std::vector<int> path; // gadget path; {} = q, {-1} = p, {i,...} = q_{i...}

    static VertexRole plain() { return {}; }
    static VertexRole group_elem(int g);
    static VertexRole connector(int g, int a);
    static VertexRole gadget_vertex(int g, int a, std::vector<int> path);
    static VertexRole bullet(int g);

    bool operator==(const VertexRole& other) const = default;

    std::string label() const;
    std::string color() const;
    std::string encode() const; // compact text form used in DOT `role` attribute
    static VertexRole decode(const std::string& text);

    nlohmann::ordered_json to_json() const;
    static VertexRole from_json(const nlohmann::json& j);
};

/// Finite simple undirected graph. Immutable after build; adjacency lists are
/// sorted so every iteration order is deterministic.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws LoopEdge, DuplicateEdge, DanglingEndpoint.
    static Graph build(std::vector<VertexRole> roles,
                       std::vector<std::pair<VertexId, VertexId>> edges);

    int vertex_count() const { return static_cast<int>(roles_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const VertexRole& role(VertexId v) const;
    const std::vector<VertexRole>& roles() const { return roles_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    int degree(VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    bool is_connected() const;
    bool is_tree() const;

    /// Induced subgraph on vs (deduplicated, ascending id order); roles kept.
    Graph induced_subgraph(const std::vector<VertexId>& vs) const;

    nlohmann::ordered_json to_json() const;
    static Graph from_json(const nlohmann::json& j);

    std::string to_dot() const;
    static Graph from_dot(const std::string& text);

    std::string serialize(const std::string& format) const; // "json" or "dot"
    static Graph deserialize(const std::string& text);      // auto-detects format

    bool operator==(const Graph& other) const {
        return roles_ == other.roles_ && edges_ == other.edges_;
    }

private:
    void check_vertex(VertexId v) const;

    std::vector<VertexRole> roles_;
    std::vector<std::pair<VertexId, VertexId>> edges_; // normalized u < v, sorted
    std::vector<std::vector<VertexId>> adjacency_;
};

/// First isomorphism (edge and non-edge preserving bijection) in lexicographic
/// search order, or nullopt. Degree-sequence prefilter, then backtracking.
std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g, const Graph& h);

} // namespace bimo

#endif
