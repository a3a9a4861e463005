#ifndef BIMO_ENGINE_HPP
#define BIMO_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bimo/algebra.hpp"
#include "bimo/graph.hpp"

namespace bimo {

/// Hard limits for the backtracking searches. Exceeding one is an error,
/// never a silent truncation.
struct SearchBudget {
    int vertices = 256;        // max vertex count per graph
    long long closure = 20000; // max elements in a map-monoid closure
    int monoid = 720;          // max order for table-isomorphism search
};

enum class MapMode {
    Monomorphism, // injective, edge-preserving
    BijectiveHom, // bijective, edge-preserving; non-edges may become edges
    Isomorphism,  // bijective, preserves edges and non-edges
};

/// A total vertex map is its image array; images[v] is the image of v.
using VertexImages = std::vector<VertexId>;

/// All maps g -> h of the given mode, sorted lexicographically by image
/// sequence. Pruned backtracking: deg(v) <= deg(v image), most-constrained
/// vertex first, candidates from mapped-neighbor adjacency.
std::vector<VertexImages> enumerate_maps(const Graph& g, const Graph& h, MapMode mode,
                                         const SearchBudget& budget = {});

std::vector<VertexImages> enumerate_bimorphisms(const Graph& g, const SearchBudget& budget = {});
std::vector<VertexImages> enumerate_automorphisms(const Graph& g, const SearchBudget& budget = {});
std::vector<VertexImages> enumerate_monomorphisms(const Graph& g, const Graph& h,
                                                  const SearchBudget& budget = {});

/// First map in search order, or nullopt.
std::optional<VertexImages> find_bijective_homomorphism(const Graph& g, const Graph& h,
                                                        const SearchBudget& budget = {});
std::optional<VertexImages> find_monomorphism(const Graph& g, const Graph& h,
                                              const SearchBudget& budget = {});

/// Reference path: filter every injection/bijection directly. Independent of
/// the pruned search; used as the oracle the engine is checked against.
std::vector<VertexImages> brute_force_maps(const Graph& g, const Graph& h, MapMode mode);

/// A set of total self-maps closed under composition, with its table.
/// compose(a, b) applies a first, then b (functions act on the right).
struct MapMonoid {
    std::vector<VertexImages> elements; // sorted lexicographically
    std::vector<std::vector<int>> table;
    int identity = 0;

    FiniteMonoid to_finite_monoid() const;
};

VertexImages compose_maps(const VertexImages& first, const VertexImages& then);

/// Closure of the given self-maps under composition, identity adjoined.
MapMonoid monoid_closure(const std::vector<VertexImages>& maps, const SearchBudget& budget = {});

/// Table-preserving bijection m1 -> m2 with identity pinned to identity, or
/// nullopt. Backtracking with power-signature prefilter.
std::optional<std::vector<int>> is_isomorphic_monoid(const FiniteMonoid& m1,
                                                     const FiniteMonoid& m2, int budget = 720);

/// Clause-by-clause verification that the bimorphisms of a constructed graph
/// are exactly the left multiplications by the target subset of the group.
struct LeftActionReport {
    bool fixes_group_class = false;     // (i) group vertices map onto group vertices
    bool is_left_multiplication = false;// (ii) restriction = left mult by some x in target
    bool bijection_onto_target = false; // (iii) bimorphism -> x is a bijection onto target
    bool no_forbidden_transport = false;// (iv) g -> h impossible when h g^-1 not in target
    std::vector<int> acting_elements;   // the x realized, sorted
    std::vector<std::string> failures;  // witness text per failed clause

    bool passed() const {
        return fixes_group_class && is_left_multiplication && bijection_onto_target &&
               no_forbidden_transport;
    }
    nlohmann::ordered_json to_json() const;
};

LeftActionReport check_regular_left_action(const std::vector<VertexImages>& bimorphisms,
                                           const Graph& graph, const FiniteGroup& group,
                                           const std::vector<int>& target_elements);

} // namespace bimo

#endif
