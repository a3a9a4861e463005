#ifndef BIMO_LADDER_HPP
#define BIMO_LADDER_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "bimo/engine.hpp"
#include "bimo/graph.hpp"

namespace bimo {

/// Finite window of the two-rail graph on Z x {0,1}: rungs everywhere, a full
/// bottom rail, and a top rail only where both endpoints are <= 0.
struct LadderWindow {
    int radius = 0;
    Graph graph;

    /// Vertex id of (a, x) with |a| <= radius, x in {0,1}.
    VertexId vertex(int a, int x) const;
    std::pair<int, int> coordinates(VertexId v) const; // (a, x)
};

LadderWindow build_ladder_window(int radius); // throws InvalidRadius for radius < 1

/// Injective edge-preserving map from window n into window m >= n.
struct WindowMap {
    int source_radius = 0;
    int target_radius = 0;
    VertexImages images;
};

/// (a, x) -> (a - k, x). Throws TargetTooSmall unless m >= n + k.
WindowMap shift_window_map(int n, int m, int k);

/// All injective edge-preserving maps from window n into window m, through
/// the engine's monomorphism search.
std::vector<WindowMap> enumerate_window_maps(int n, int m, const SearchBudget& budget = {});

/// The shift k such that the map equals (a,x) -> (a-k,x) on every vertex with
/// |a| <= n - interior_margin, or nullopt.
std::optional<int> classify_as_shift(const WindowMap& map, int interior_margin);

/// Apply `first`, then `then`; requires first.target_radius == then.source_radius.
WindowMap compose(const WindowMap& first, const WindowMap& then);

/// Path on n vertices (the one-way-line example).
Graph build_ray(int n); // throws InvalidArgument for n < 2

struct RayReport {
    int length = 0;
    int bimorphism_count = 0;
    bool endpoints_to_endpoints = false;

    nlohmann::ordered_json to_json() const;
};

RayReport verify_ray_rigid_window(int n);

/// JSON report of all window maps n -> m with their shift classifications.
nlohmann::ordered_json ladder_report(int n, int m, int margin,
                                     const SearchBudget& budget = {});

} // namespace bimo

#endif
