#include "bimo/ladder.hpp"

namespace bimo {

VertexId LadderWindow::vertex(int a, int x) const {
    if (a < -radius || a > radius || x < 0 || x > 1)
        throw Error(ErrorCode::UnknownVertex,
                    "(" + std::to_string(a) + "," + std::to_string(x) + ")");
    return 2 * (a + radius) + x;
}

std::pair<int, int> LadderWindow::coordinates(VertexId v) const {
    if (v < 0 || v >= graph.vertex_count())
        throw Error(ErrorCode::UnknownVertex, std::to_string(v));
    return {v / 2 - radius, v % 2};
}

LadderWindow build_ladder_window(int radius) {
    if (radius < 1)
        throw Error(ErrorCode::InvalidRadius, "radius must be >= 1");
    LadderWindow w;
    w.radius = radius;
    std::vector<VertexRole> roles(2 * (2 * radius + 1), VertexRole::plain());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int a = -radius; a <= radius; ++a) {
        edges.emplace_back(w.vertex(a, 0), w.vertex(a, 1)); // rung
        if (a < radius) edges.emplace_back(w.vertex(a, 0), w.vertex(a + 1, 0));
        if (a + 1 <= 0) edges.emplace_back(w.vertex(a, 1), w.vertex(a + 1, 1));
    }
    w.graph = Graph::build(std::move(roles), std::move(edges));
    return w;
}

WindowMap shift_window_map(int n, int m, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "shift must be >= 0");
    if (m < n + k)
        throw Error(ErrorCode::TargetTooSmall,
                    "target radius " + std::to_string(m) + " < " + std::to_string(n + k));
    LadderWindow src = build_ladder_window(n);
    LadderWindow dst = build_ladder_window(m);
    WindowMap map;
    map.source_radius = n;
    map.target_radius = m;
    map.images.resize(src.graph.vertex_count());
    for (VertexId v = 0; v < src.graph.vertex_count(); ++v) {
        auto [a, x] = src.coordinates(v);
        map.images[v] = dst.vertex(a - k, x);
    }
    // shifts preserve every edge; check it rather than trust the rules
    for (const auto& [u, v] : src.graph.edges())
        if (!dst.graph.has_edge(map.images[u], map.images[v]))
            throw Error(ErrorCode::InvalidArgument, "shift map dropped an edge");
    return map;
}

std::vector<WindowMap> enumerate_window_maps(int n, int m, const SearchBudget& budget) {
    if (m < n) throw Error(ErrorCode::TargetTooSmall, "target radius below source radius");
    LadderWindow src = build_ladder_window(n);
    LadderWindow dst = build_ladder_window(m);
    std::vector<WindowMap> out;
    for (auto& images : enumerate_monomorphisms(src.graph, dst.graph, budget)) {
        WindowMap map;
        map.source_radius = n;
        map.target_radius = m;
        map.images = std::move(images);
        out.push_back(std::move(map));
    }
    return out;
}

std::optional<int> classify_as_shift(const WindowMap& map, int interior_margin) {
    if (interior_margin < 1)
        throw Error(ErrorCode::InvalidArgument, "interior margin must be >= 1");
    LadderWindow src = build_ladder_window(map.source_radius);
    LadderWindow dst = build_ladder_window(map.target_radius);
    int bound = map.source_radius - interior_margin;
    if (bound < 0) return std::nullopt;
    auto [a0, x0] = dst.coordinates(map.images[src.vertex(0, 0)]);
    if (x0 != 0) return std::nullopt;
    int k = -a0;
    for (int a = -bound; a <= bound; ++a)
        for (int x = 0; x <= 1; ++x) {
            auto [ia, ix] = dst.coordinates(map.images[src.vertex(a, x)]);
            if (ia != a - k || ix != x) return std::nullopt;
        }
    return k;
}

WindowMap compose(const WindowMap& first, const WindowMap& then) {
    if (first.target_radius != then.source_radius)
        throw Error(ErrorCode::InvalidArgument, "window maps do not chain");
    WindowMap out;
    out.source_radius = first.source_radius;
    out.target_radius = then.target_radius;
    out.images.resize(first.images.size());
    for (std::size_t v = 0; v < first.images.size(); ++v)
        out.images[v] = then.images[first.images[v]];
    return out;
}

Graph build_ray(int n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 vertices");
    std::vector<VertexRole> roles(n, VertexRole::plain());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(std::move(roles), std::move(edges));
}

nlohmann::ordered_json RayReport::to_json() const {
    nlohmann::ordered_json j;
    j["length"] = length;
    j["bimorphism_count"] = bimorphism_count;
    j["endpoints_to_endpoints"] = endpoints_to_endpoints;
    return j;
}

RayReport verify_ray_rigid_window(int n) {
    Graph path = build_ray(n);
    auto bims = enumerate_bimorphisms(path);
    RayReport report;
    report.length = n;
    report.bimorphism_count = static_cast<int>(bims.size());
    report.endpoints_to_endpoints = true;
    for (const auto& beta : bims) {
        bool first_end = beta[0] == 0 || beta[0] == n - 1;
        bool last_end = beta[n - 1] == 0 || beta[n - 1] == n - 1;
        if (!first_end || !last_end) report.endpoints_to_endpoints = false;
    }
    return report;
}

nlohmann::ordered_json ladder_report(int n, int m, int margin, const SearchBudget& budget) {
    auto maps = enumerate_window_maps(n, m, budget);
    nlohmann::ordered_json j;
    j["radius"] = n;
    j["target"] = m;
    j["margin"] = margin;
    j["map_count"] = maps.size();
    j["maps"] = nlohmann::ordered_json::array();
    for (const auto& map : maps) {
        nlohmann::ordered_json entry;
        entry["images"] = map.images;
        auto shift = classify_as_shift(map, margin);
        if (shift)
            entry["shift"] = *shift;
        else
            entry["shift"] = nullptr;
        j["maps"].push_back(std::move(entry));
    }
    return j;
}

} // namespace bimo
