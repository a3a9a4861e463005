#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bimo/algebra.hpp"

using namespace bimo;

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// identity 0 adjoined to the left-zero semigroup on {1, 2}
const std::vector<std::vector<int>> left_zero_table{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};

} // namespace

TEST_CASE("monoid_from_table") {
    CHECK(monoid_from_table({{0}}).order == 1);

    FiniteMonoid z2 = monoid_from_table(cyclic_table(2));
    CHECK(z2.identity == 0);

    // (1*1)*2 = 2 but 1*(1*2) = 1
    std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 0, 1}, {2, 1, 2}};
    CHECK_THROWS_AS(monoid_from_table(bad), Error);

    std::vector<std::vector<int>> no_id{{0, 0}, {0, 0}};
    CHECK_THROWS_AS(monoid_from_table(no_id), Error);

    CHECK_THROWS_AS(monoid_from_table({{0, 1}}), Error); // not square
}

TEST_CASE("group_from_table") {
    FiniteGroup z4 = group_from_table(cyclic_table(4));
    CHECK(z4.order == 4);
    CHECK(z4.inv(1) == 3);

    // S3 table must match composition of permutations of 3 points
    FiniteGroup s3 = symmetric_group_s3();
    CHECK(s3.order == 6);
    for (int x = 0; x < 6; ++x) CHECK(s3.product(x, s3.inv(x)) == s3.identity);

    CHECK_THROWS_AS(group_from_table(left_zero_table), Error);
}

TEST_CASE("group_from_permutation_generators") {
    FiniteGroup z4 = group_from_permutation_generators({{1, 2, 3, 0}});
    CHECK(z4.order == 4);

    FiniteGroup s3 = group_from_permutation_generators({{1, 0, 2}, {1, 2, 0}});
    CHECK(s3.order == 6);
    CHECK(is_cancellative(s3));

    FiniteGroup trivial = group_from_permutation_generators({});
    CHECK(trivial.order == 1);

    // symmetric group on 8 points exceeds the order budget
    std::vector<int> cycle{1, 2, 3, 4, 5, 6, 7, 0};
    std::vector<int> swap{1, 0, 2, 3, 4, 5, 6, 7};
    CHECK_THROWS_AS(group_from_permutation_generators({cycle, swap}), Error);
}

TEST_CASE("parse_permutation") {
    CHECK(parse_permutation("0 2 1", 3) == std::vector<int>{0, 2, 1});
    CHECK(parse_permutation("(0 1)(2 3)", 4) == std::vector<int>{1, 0, 3, 2});
    CHECK(parse_permutation("(0 1 2)", 3) == std::vector<int>{1, 2, 0});
    CHECK_THROWS_AS(parse_permutation("0 0 1", 3), Error);
}

TEST_CASE("submonoid_closure") {
    FiniteGroup s3 = symmetric_group_s3();

    // find a 3-cycle: an element of order 3
    int three_cycle = -1;
    for (int x = 0; x < 6; ++x)
        if (x != s3.identity && s3.product(x, s3.product(x, x)) == s3.identity)
            three_cycle = x;
    REQUIRE(three_cycle >= 0);
    Submonoid a3 = submonoid_closure(s3, {three_cycle});
    CHECK(a3.elements.size() == 3);

    CHECK(submonoid_closure(s3, {}).elements == std::vector<int>{s3.identity});
    CHECK(submonoid_closure(s3, {0, 1, 2, 3, 4, 5}).elements.size() == 6);

    // idempotent
    CHECK(submonoid_closure(s3, a3.elements).elements == a3.elements);
}

TEST_CASE("cancellativity and Ore condition") {
    for (int n : {2, 3, 4, 5, 6}) {
        FiniteMonoid g = group_from_table(cyclic_table(n));
        CHECK(is_cancellative(g));
        CHECK(check_ore_condition(g));
    }
    FiniteMonoid lz = monoid_from_table(left_zero_table);
    CHECK_FALSE(is_cancellative(lz));
}

TEST_CASE("left_mult_permutation is a group action") {
    FiniteGroup z4 = cyclic_group(4);
    std::vector<int> identity{0, 1, 2, 3};
    CHECK(left_mult_permutation(z4, 0) == identity);
    CHECK(left_mult_permutation(z4, 1) == std::vector<int>{1, 2, 3, 0});

    FiniteGroup z5 = cyclic_group(5);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            auto px = left_mult_permutation(z5, x);
            auto py = left_mult_permutation(z5, y);
            auto pxy = left_mult_permutation(z5, z5.product(x, y));
            for (int g = 0; g < 5; ++g) CHECK(px[py[g]] == pxy[g]);
        }
}

TEST_CASE("table_from_json accepts bare arrays and wrappers") {
    auto bare = nlohmann::json::parse("[[0,1],[1,0]]");
    CHECK(table_from_json(bare) == cyclic_table(2));
    auto wrapped = nlohmann::json::parse("{\"table\":[[0,1],[1,0]]}");
    CHECK(table_from_json(wrapped) == cyclic_table(2));
    CHECK_THROWS_AS(table_from_json(nlohmann::json::parse("\"nope\"")), Error);
}
