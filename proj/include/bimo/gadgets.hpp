#ifndef BIMO_GADGETS_HPP
#define BIMO_GADGETS_HPP

#include <vector>

#include <json.hpp>

#include "bimo/engine.hpp"
#include "bimo/graph.hpp"

namespace bimo {

/// Level-by-level branching plan for a rooted gadget tree. Level 1 hangs
/// `count` children off q; level i hangs children off the named paths of
/// length i-1. Paths absent from a level stay leaves, so finite specs can
/// describe asymmetric trees.
struct GadgetSpec {
    struct Assignment {
        std::vector<int> path; // branch indices from q; {} names q itself
        int count = 0;         // positive
        bool operator==(const Assignment&) const = default;
    };
    std::vector<std::vector<Assignment>> levels;

    /// Throws InvalidSpec on duplicate counts within a level, bad paths, or
    /// non-positive counts.
    void validate() const;

    int vertex_count() const; // 2 (p, q) plus one per assignment child

    nlohmann::ordered_json to_json() const;
    static GadgetSpec from_json(const nlohmann::json& j);

    bool operator==(const GadgetSpec&) const = default;
};

/// A built gadget tree with its distinguished vertices. {p, q} is an edge and
/// rigidity is verified per instance, never assumed.
struct Gadget {
    Graph graph;
    VertexId p = 0;
    VertexId q = 1;
    GadgetSpec spec;

    int size() const { return graph.vertex_count(); }
};

Gadget build_gadget(const GadgetSpec& spec);

/// True iff the automorphism group is exactly the identity.
bool verify_rigid(const Gadget& gadget);

/// True iff the only bimorphism is the identity; coincides with verify_rigid
/// on trees.
bool verify_bimorphism_rigid(const Gadget& gadget);

/// k rigid, pairwise non-isomorphic gadget trees with strictly increasing
/// sizes, each larger than min_size. Deterministic. Throws GenerationFailed
/// if the bounded spec search is exhausted.
std::vector<Gadget> default_gadget_family(int k, int min_size);

/// Bijective homomorphisms in both directions.
bool check_bimorphism_equivalent(const Graph& g, const Graph& h);

} // namespace bimo

#endif
