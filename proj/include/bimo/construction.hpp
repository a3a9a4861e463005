#ifndef BIMO_CONSTRUCTION_HPP
#define BIMO_CONSTRUCTION_HPP

#include <vector>

#include <json.hpp>

#include "bimo/algebra.hpp"
#include "bimo/gadgets.hpp"
#include "bimo/graph.hpp"

namespace bimo {

/// The Cayley graph of G over A = G \ {e} with every generator edge routed
/// through a connector vertex and a rigid tree gadget. Generators are
/// assigned gadgets by ascending element index -> ascending gadget size.
struct ModifiedCayleyGraph {
    Graph graph;
    FiniteGroup group;
    std::vector<int> generators;         // sorted element indices, e excluded
    std::vector<Gadget> gadgets;         // by generator rank, ascending size

    VertexId group_vertex(int g) const;              // g < |G|
    VertexId connector_vertex(int g, int a_rank) const;
    /// Vertex ids of the gadget block (g, R_a); contiguous, gadget order.
    std::vector<VertexId> block(int g, int a_rank) const;
    VertexId block_p(int g, int a_rank) const;

    nlohmann::ordered_json to_json() const;
    static ModifiedCayleyGraph from_json(const nlohmann::json& j);

private:
    int block_start(int g, int a_rank) const;
    std::vector<int> block_offsets_; // by a_rank: offset of connector column
    friend ModifiedCayleyGraph build_modified_cayley(const FiniteGroup&,
                                                     const std::vector<Gadget>&);
};

/// Gamma-star: the base graph plus a bullet vertex above every group element
/// and a clique on the bullets of the submonoid image B.
struct TopLayerGraph {
    ModifiedCayleyGraph base;
    std::vector<int> submonoid_elements; // sorted
    Graph graph;

    VertexId bullet_vertex(int g) const;

    nlohmann::ordered_json to_json() const;
    static TopLayerGraph from_json(const nlohmann::json& j);
};

/// Throws GroupTooSmall (|G| <= 3), GadgetCountMismatch, GadgetNotRigid,
/// GadgetSizeTooSmall (size <= |G| or duplicate sizes).
ModifiedCayleyGraph build_modified_cayley(const FiniteGroup& group,
                                          const std::vector<Gadget>& gadgets);

/// Throws SubmonoidTooSmall (|B| < 2) and SubmonoidNotInGroup.
TopLayerGraph build_top_layer(const ModifiedCayleyGraph& base, const Submonoid& submonoid);

namespace detail {
/// Test hook: skips the |B| >= 2 check so the negative control (B = {e},
/// clique-free bullet layer) can be built and measured.
TopLayerGraph build_top_layer_unchecked(const ModifiedCayleyGraph& base,
                                        const std::vector<int>& submonoid_elements);
} // namespace detail

/// Degree facts per role class, as a report for assertions and export.
struct DegreeProfile {
    int group_min_degree = 0;
    int group_max_degree = 0;
    std::vector<int> connector_degrees; // distinct values, sorted
    std::vector<int> p_degrees;         // distinct values, sorted
    std::vector<int> bullet_degrees_inside;  // distinct values among B bullets
    std::vector<int> bullet_degrees_outside; // distinct values among non-B bullets

    nlohmann::ordered_json to_json() const;
};

DegreeProfile degree_profile(const Graph& graph,
                             const std::vector<int>& submonoid_elements = {});

} // namespace bimo

#endif
