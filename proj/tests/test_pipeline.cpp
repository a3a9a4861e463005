#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bimo/pipeline.hpp"

using namespace bimo;

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

} // namespace

TEST_CASE("parse_element_list") {
    CHECK(parse_element_list("1,2,5") == std::vector<int>{1, 2, 5});
    CHECK(parse_element_list(" 0 , 3 ") == std::vector<int>{0, 3});
    CHECK(parse_element_list("").empty());
    CHECK_THROWS_AS(parse_element_list("1,x"), Error);
}

TEST_CASE("digest is canonical") {
    nlohmann::json a = {{"x", 1}, {"y", 2}};
    nlohmann::json b = {{"y", 2}, {"x", 1}};
    CHECK(digest(a) == digest(b)); // nlohmann::json sorts keys
    CHECK(digest(a) != digest(nlohmann::json{{"x", 1}}));
}

TEST_CASE("full run on Z4 with the proper subgroup {0,2}") {
    VerificationCertificate cert = run_pipeline(cyclic_table(4), "2", {});
    CHECK(cert.passed);
    const auto& doc = cert.document;
    CHECK(doc["inputs"]["submonoid"] == std::vector<int>{0, 2});
    CHECK(doc["bimorphisms"].size() == 2);
    CHECK(doc["closure_added_nothing"] == true);
    CHECK_FALSE(doc["isomorphism_witness"].is_null());
    CHECK(doc["clauses"]["fixes_group_class"] == true);
    CHECK(doc["clauses"]["no_forbidden_transport"] == true);
    CHECK(doc["passed"] == true);
}

TEST_CASE("full run on Z4 with B = G") {
    PipelineOptions options;
    options.oracle = true;
    VerificationCertificate cert = run_pipeline(cyclic_table(4), "1", options);
    CHECK(cert.passed);
    CHECK(cert.document["bimorphisms"].size() == 4);
    CHECK(cert.document["oracle_checked"] == true);
    CHECK(cert.document["oracle_passed"] == true);
}

TEST_CASE("refusal certificates") {
    // |G| <= 3
    VerificationCertificate small = run_pipeline(cyclic_table(3), "1", {});
    CHECK_FALSE(small.passed);
    CHECK(small.document.contains("error"));

    // B = {e}
    VerificationCertificate trivial = run_pipeline(cyclic_table(4), "", {});
    CHECK_FALSE(trivial.passed);
    CHECK(trivial.document.contains("error"));
    CHECK(trivial.document["passed"] == false);
}

TEST_CASE("replay") {
    VerificationCertificate cert = run_pipeline(cyclic_table(4), "2", {});
    REQUIRE(cert.passed);
    CHECK(replay(cert.document));

    // edited bimorphism list must be flagged with the differing field
    auto tampered = cert.document;
    tampered["bimorphisms"][0][0] = 99;
    CHECK_THROWS_AS(replay(tampered), Error);

    // changed budgets are recorded and reused, so replay still passes
    auto rebudgeted_inputs = cert.document;
    PipelineOptions wide;
    wide.budget_vertices = 500;
    VerificationCertificate cert2 = run_pipeline(cyclic_table(4), "2", wide);
    CHECK(replay(cert2.document));

    CHECK_THROWS_AS(replay(nlohmann::json{{"format", "bogus"}}), Error);
}

TEST_CASE("pipeline is deterministic") {
    VerificationCertificate a = run_pipeline(cyclic_table(4), "2", {});
    VerificationCertificate b = run_pipeline(cyclic_table(4), "2", {});
    auto da = a.document, db = b.document;
    da.erase("wall_clock_ms");
    db.erase("wall_clock_ms");
    CHECK(da == db);
}
