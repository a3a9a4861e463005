#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bimo/ladder.hpp"

using namespace bimo;

TEST_CASE("window adjacency matches the three rules") {
    for (int n = 1; n <= 6; ++n) {
        LadderWindow w = build_ladder_window(n);
        CHECK(w.graph.vertex_count() == 2 * (2 * n + 1));
        int rungs = 0, bottom = 0, top = 0;
        for (const auto& [u, v] : w.graph.edges()) {
            auto [a, x] = w.coordinates(u);
            auto [b, y] = w.coordinates(v);
            if (x != y) {
                CHECK(a == b);
                ++rungs;
            } else if (x == 0) {
                CHECK(std::abs(a - b) == 1);
                ++bottom;
            } else {
                CHECK(std::abs(a - b) == 1);
                CHECK(std::max(a, b) <= 0);
                ++top;
            }
        }
        CHECK(rungs == 2 * n + 1);
        CHECK(bottom == 2 * n);
        CHECK(top == n);

        // quantified over all pairs: an edge exists iff one rule applies
        for (VertexId u = 0; u < w.graph.vertex_count(); ++u)
            for (VertexId v = u + 1; v < w.graph.vertex_count(); ++v) {
                auto [a, x] = w.coordinates(u);
                auto [b, y] = w.coordinates(v);
                bool rule = (x != y && a == b) ||
                            (x == 0 && y == 0 && std::abs(a - b) == 1) ||
                            (x == 1 && y == 1 && std::abs(a - b) == 1 && std::max(a, b) <= 0);
                CHECK(w.graph.has_edge(u, v) == rule);
            }
    }
    CHECK_THROWS_AS(build_ladder_window(0), Error);
}

TEST_CASE("the interior vertex (0,1) has degree 2") {
    LadderWindow w = build_ladder_window(2);
    CHECK(w.graph.degree(w.vertex(0, 1)) == 2);
}

TEST_CASE("shift maps") {
    // k = 0 is the inclusion
    WindowMap incl = shift_window_map(2, 2, 0);
    LadderWindow w2 = build_ladder_window(2);
    for (VertexId v = 0; v < w2.graph.vertex_count(); ++v) CHECK(incl.images[v] == v);

    // k = 1 sends the non-edge {(0,1),(1,1)} to the edge {(-1,1),(0,1)}
    WindowMap alpha = shift_window_map(2, 3, 1);
    LadderWindow w3 = build_ladder_window(3);
    CHECK_FALSE(w2.graph.has_edge(w2.vertex(0, 1), w2.vertex(1, 1)));
    CHECK(w3.graph.has_edge(alpha.images[w2.vertex(0, 1)], alpha.images[w2.vertex(1, 1)]));

    // all edges preserved for several k
    for (int k = 0; k <= 3; ++k) {
        WindowMap m = shift_window_map(2, 2 + k, k);
        LadderWindow dst = build_ladder_window(2 + k);
        for (const auto& [u, v] : w2.graph.edges())
            CHECK(dst.graph.has_edge(m.images[u], m.images[v]));
    }

    CHECK_THROWS_AS(shift_window_map(3, 3, 1), Error);
    CHECK_THROWS_AS(shift_window_map(2, 3, -1), Error);
}

TEST_CASE("classify_as_shift") {
    CHECK(classify_as_shift(shift_window_map(3, 5, 2), 1) == 2);
    CHECK(classify_as_shift(shift_window_map(3, 3, 0), 1) == 0);

    // corrupt a shift on the boundary only: still classified with margin 2
    WindowMap tweaked = shift_window_map(3, 6, 1);
    LadderWindow src = build_ladder_window(3);
    LadderWindow dst = build_ladder_window(6);
    tweaked.images[src.vertex(3, 1)] = dst.vertex(5, 1);
    CHECK(classify_as_shift(tweaked, 2) == 1);

    // corrupt the interior: no longer a shift
    WindowMap broken = shift_window_map(3, 6, 1);
    broken.images[src.vertex(0, 1)] = dst.vertex(4, 1);
    CHECK_FALSE(classify_as_shift(broken, 2).has_value());
}

TEST_CASE("shift composition adds the shifts") {
    WindowMap k1 = shift_window_map(2, 4, 1);
    WindowMap k2 = shift_window_map(4, 7, 2);
    WindowMap both = compose(k1, k2);
    CHECK(classify_as_shift(both, 1) == 3);

    CHECK_THROWS_AS(compose(k2, k1), Error); // radii do not chain
}

TEST_CASE("enumerated window maps classify as shifts") {
    auto maps = enumerate_window_maps(2, 3);
    CHECK(!maps.empty());
    bool identity_found = false;
    for (const auto& m : maps) {
        if (m.source_radius == 2) {
            LadderWindow src = build_ladder_window(2);
            bool is_id = true;
            for (VertexId v = 0; v < src.graph.vertex_count(); ++v)
                if (m.images[v] != build_ladder_window(3).vertex(src.coordinates(v).first,
                                                                 src.coordinates(v).second))
                    is_id = false;
            if (is_id) identity_found = true;
        }
    }
    CHECK(identity_found); // the inclusion is among the results
}

TEST_CASE("rays are bimorphism-trivial up to the end swap") {
    for (int n = 3; n <= 8; ++n) {
        RayReport report = verify_ray_rigid_window(n);
        CHECK(report.bimorphism_count == 2);
        CHECK(report.endpoints_to_endpoints);
    }
    RayReport k2 = verify_ray_rigid_window(2);
    CHECK(k2.bimorphism_count == 2);
    CHECK_THROWS_AS(build_ray(1), Error);
}

TEST_CASE("ladder report JSON") {
    auto report = ladder_report(1, 2, 1);
    CHECK(report["radius"] == 1);
    CHECK(report["map_count"].get<int>() > 0);
    for (const auto& entry : report["maps"]) CHECK(entry.contains("shift"));
}
