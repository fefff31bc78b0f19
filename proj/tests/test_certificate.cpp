#include <doctest.h>

#include "walkup/certificate.hpp"

using namespace walkup;

TEST_SUITE("certificate") {

TEST_CASE("overall verdict aggregation") {
    Certificate cert;
    cert.subject = "x";
    cert.add("a", true);
    CHECK(cert.overall() == Verdict::Pass);
    cert.checks.push_back({"b", Verdict::Inconclusive, "", {}, 0.0});
    CHECK(cert.overall() == Verdict::Inconclusive);
    cert.add("c", false);
    CHECK(cert.overall() == Verdict::Fail);
    CHECK_FALSE(cert.all_pass());
    CHECK(cert.find("b") != nullptr);
    CHECK(cert.find("zzz") == nullptr);
}

TEST_CASE("json form carries schema, version and verdict strings") {
    Certificate cert;
    cert.subject = "thing";
    cert.parameters = {{"d", 3}};
    cert.add("check1", true, "fine", {{"value", 7}});
    nlohmann::json j = certificate_to_json(cert);
    CHECK(j["schema"] == 1);
    CHECK(j["toolkit_version"] == kToolkitVersion);
    CHECK(j["overall"] == "PASS");
    CHECK(j["checks"][0]["witness"]["value"] == 7);
    CHECK(j["checks"][0].contains("duration_ms"));
    nlohmann::json c = certificate_to_json(cert, true);
    CHECK_FALSE(c["checks"][0].contains("duration_ms"));
}

TEST_CASE("oversized witnesses are truncated with a flag") {
    Certificate cert;
    cert.subject = "big";
    nlohmann::json huge = nlohmann::json::array();
    for (int i = 0; i < 20000; ++i) huge.push_back(i);
    CheckResult r;
    r.name = "bulky";
    r.verdict = Verdict::Pass;
    r.witness = {{"data", huge}};
    cert.add(std::move(r));
    nlohmann::json j = certificate_to_json(cert);
    CHECK(j["checks"][0]["witness"]["truncated"] == true);
    CHECK(j["checks"][0]["witness"]["original_bytes"].get<std::size_t>() > kWitnessByteCap);
}

TEST_CASE("permutations serialize as parallel images arrays") {
    std::map<int, int> m{{0, 2}, {1, 0}, {2, 1}};
    nlohmann::json j = permutation_json(m);
    CHECK(j["domain"] == nlohmann::json::array({0, 1, 2}));
    CHECK(j["images"] == nlohmann::json::array({2, 0, 1}));
}

} // TEST_SUITE
