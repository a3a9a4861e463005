#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bimo/gadgets.hpp"
#include "oracle.hpp"

using namespace bimo;
using namespace bimo_test;

namespace {

GadgetSpec spec_from_text(const char* text) {
    return GadgetSpec::from_json(nlohmann::json::parse(text));
}

} // namespace

TEST_CASE("build_gadget counts vertices per construction step") {
    // level 1 hangs 2 children off q; level 2 hangs 3 and 4 children
    auto spec = spec_from_text(R"({"levels":[
        [{"path":[],"count":2}],
        [{"path":[0],"count":3},{"path":[1],"count":4}]]})");
    Gadget g = build_gadget(spec);
    CHECK(g.graph.vertex_count() == 11); // p + q + 2 + 3 + 4
    CHECK(g.graph.is_tree());
    CHECK(g.graph.has_edge(g.p, g.q));
    CHECK(g.graph.degree(g.p) == 1);
}

TEST_CASE("a symmetric chain builds but fails the rigidity check") {
    auto spec = spec_from_text(R"({"levels":[
        [{"path":[],"count":1}],
        [{"path":[0],"count":1}]]})");
    Gadget g = build_gadget(spec); // the path p-q-x-y
    CHECK(g.graph.vertex_count() == 4);
    CHECK_FALSE(verify_rigid(g));
    CHECK(enumerate_automorphisms(g.graph).size() == 2);
}

TEST_CASE("invalid specs are rejected") {
    // two siblings with equal branching counts at the same level
    auto dup = spec_from_text(R"({"levels":[
        [{"path":[],"count":2}],
        [{"path":[0],"count":3},{"path":[1],"count":3}]]})");
    CHECK_THROWS_AS(build_gadget(dup), Error);

    auto bad_path = spec_from_text(R"({"levels":[
        [{"path":[],"count":1}],
        [{"path":[5],"count":2}]]})");
    CHECK_THROWS_AS(build_gadget(bad_path), Error);

    auto nonpositive = spec_from_text(R"({"levels":[[{"path":[],"count":0}]]})");
    CHECK_THROWS_AS(build_gadget(nonpositive), Error);
}

TEST_CASE("rigidity checks on degenerate graphs") {
    Gadget k2;
    k2.graph = plain_graph(2, {{0, 1}});
    CHECK_FALSE(verify_rigid(k2));
    CHECK_FALSE(verify_bimorphism_rigid(k2));

    Gadget single;
    single.graph = plain_graph(1, {});
    CHECK(verify_rigid(single));

    Gadget p3;
    p3.graph = path_graph(3);
    CHECK_FALSE(verify_bimorphism_rigid(p3));
}

TEST_CASE("default_gadget_family properties") {
    auto family = default_gadget_family(3, 4);
    REQUIRE(family.size() == 3);
    int prev = 4;
    for (const auto& g : family) {
        CHECK(g.size() > prev);
        prev = g.size();
        CHECK(g.graph.is_tree());
        CHECK(verify_rigid(g));
        CHECK(verify_bimorphism_rigid(g));
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            CHECK_FALSE(find_isomorphism(family[i].graph, family[j].graph));
            CHECK_FALSE(check_bimorphism_equivalent(family[i].graph, family[j].graph));
        }

    auto one = default_gadget_family(1, 0);
    REQUIRE(one.size() == 1);
    CHECK(verify_rigid(one[0]));
}

TEST_CASE("spec serialization round trip") {
    auto family = default_gadget_family(2, 6);
    for (const auto& g : family)
        CHECK(GadgetSpec::from_json(g.spec.to_json()) == g.spec);
}

TEST_CASE("bimorphism equivalence for equal-size trees means isomorphism") {
    // path of 7 vs the rigid fork tree of 7: same size, not isomorphic
    Graph p7 = path_graph(7);
    Graph fork = plain_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
    CHECK_FALSE(find_isomorphism(p7, fork));
    CHECK_FALSE(check_bimorphism_equivalent(p7, fork));
    CHECK(check_bimorphism_equivalent(fork, fork));

    std::mt19937 rng(3);
    for (int i = 0; i < 5; ++i) {
        auto family = default_gadget_family(2, 5 + i);
        const Graph& a = family[0].graph;
        const Graph& b = family[1].graph;
        CHECK(check_bimorphism_equivalent(a, b) == find_isomorphism(a, b).has_value());
    }
}

TEST_CASE("monomorphisms between distinct-size gadgets go one way at most") {
    auto family = default_gadget_family(2, 5);
    const Graph& small = family[0].graph;
    const Graph& large = family[1].graph;
    // injectivity into fewer vertices is impossible
    CHECK_FALSE(find_monomorphism(large, small).has_value());
}
