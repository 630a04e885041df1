#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rlab/experiments.hpp"
#include "rlab/report.hpp"

using namespace rlab;
using json = nlohmann::json;

TEST_CASE("canonical dumps sort keys and pin float formatting") {
    json j;
    j["zeta"] = 1;
    j["alpha"] = 0.1;
    j["mid"] = json::array({1, 2.5, "x"});
    std::string text = canonical_dump(j);
    CHECK(text == "{\"alpha\":0.10000000000000001,\"mid\":[1,2.5,\"x\"],\"zeta\":1}");
    // idempotent after one round trip
    CHECK(canonical_dump(json::parse(text)) == text);
}

TEST_CASE("infinities survive the wire format") {
    json j;
    j["a"] = json_number(std::numeric_limits<double>::infinity());
    j["b"] = json_number(-std::numeric_limits<double>::infinity());
    j["c"] = json_number(2.0);
    std::string text = canonical_dump(j);
    json back = json::parse(text);
    CHECK(std::isinf(number_from_json(back["a"])));
    CHECK(number_from_json(back["b"]) < 0);
    CHECK(number_from_json(back["c"]) == 2.0);
}

TEST_CASE("schema stamping and validation") {
    json j;
    stamp_report(j, "demo", 42);
    j["wall_ms"] = 12.0;
    std::string text = canonical_dump(j);
    json back = load_report(text);
    CHECK(back["experiment"] == "demo");

    json bad = j;
    bad["schema_version"] = 999;
    CHECK_THROWS_WITH_AS(load_report(canonical_dump(bad)),
                         doctest::Contains("SchemaViolation"), Error);
    CHECK_THROWS_WITH_AS(load_report("{\"x\":1}"),
                         doctest::Contains("SchemaViolation"), Error);
    CHECK_THROWS_WITH_AS(load_report("not json"),
                         doctest::Contains("SchemaViolation"), Error);
}

TEST_CASE("content hashes ignore the wall clock") {
    json a;
    stamp_report(a, "demo", 7);
    a["wall_ms"] = 3.25;
    json b = a;
    b["wall_ms"] = 99.75;
    CHECK(content_hash(a) == content_hash(b));
    json c = a;
    c["master_seed"] = 8;
    CHECK(content_hash(a) != content_hash(c));
}

TEST_CASE("experiments reproduce from their parameter blocks") {
    json a = hyperoctahedral_experiment(8, 2, 5);
    json b = hyperoctahedral_experiment(8, 2, 5);
    CHECK(content_hash(a) == content_hash(b));
    CHECK(a["aggregate"]["mismatches"] == 0);

    json c = oracle_agreement_experiment(20, 11);
    json d = oracle_agreement_experiment(20, 11);
    CHECK(content_hash(c) == content_hash(d));
    CHECK(c["aggregate"]["oracle_pass_search_fail"] == 0);
}

TEST_CASE("the thread cap respects the environment") {
    setenv("RIGIDITYLAB_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    setenv("RIGIDITYLAB_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    unsetenv("RIGIDITYLAB_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("experiment reports carry the schema and provenance header") {
    json r = hitting_time_experiment(30, 2, 2, 3);
    CHECK(r["schema"] == kReportSchema);
    CHECK(r["schema_version"] == kReportVersion);
    CHECK(r.contains("provenance"));
    CHECK(r["provenance"].contains("free_choices"));
    load_report(canonical_dump(r)); // validates
}
