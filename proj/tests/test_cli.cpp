#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "rlab/graph.hpp"
#include "rlab/partition.hpp"
#include "rlab/constructors.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RIGIDITYLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/rigiditylab_test_" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("rigidity test exits 0 on certified graphs and 1 on flexible ones") {
    std::string k46 = write_temp("k46.edges", rlab::write_graph_text(
                                                  rlab::Graph::complete_bipartite(4, 6)));
    RunResult r = run("rigidity test --dim 3 --input " + k46);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["kind"] == "RigidCertified");

    std::string c4 = write_temp("c4.edges", rlab::write_graph_text(rlab::Graph::cycle(4)));
    RunResult flex = run("rigidity test --dim 2 --input " + c4);
    CHECK(flex.exit_code == 1);
    CHECK(json::parse(flex.out)["kind"] == "ProbablyFlexible");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("rigidity test --dim 3").exit_code == 2);          // missing input
    CHECK(run("frobnicate").exit_code == 2);                     // unknown subcommand
    CHECK(run("rigidity test --dim 3 --input /nonexistent").exit_code == 2);
}

TEST_CASE("partition verify and bound check round trip through files") {
    rlab::Graph k4 = rlab::Graph::complete(4);
    rlab::StrongPartition sp;
    sp.kind = rlab::StrongKind::TypeI;
    sp.d = 2;
    sp.parts = {{0, 1}, {2, 3}};
    rlab::RigidPartition rp = rlab::convert_to_rigid_partition(k4, sp);
    std::string gpath = write_temp("k4.edges", rlab::write_graph_text(k4));
    std::string ppath = write_temp("k4.partition.json", rlab::rigid_partition_to_json(rp));

    RunResult verify = run("partition verify --input " + gpath + " --partition " + ppath);
    CHECK(verify.exit_code == 0);
    json vj = json::parse(verify.out);
    CHECK(vj["accepted"] == true);
    CHECK(vj.contains("hierarchy"));

    RunResult bound = run("bound check --input " + gpath + " --partition " + ppath);
    CHECK(bound.exit_code == 0);
    json bj = json::parse(bound.out);
    CHECK(bj["holds"] == true);
    CHECK(bj["per_pair_a"].contains("1,2"));

    // rejected partitions exit 1
    rlab::RigidPartition broken = rp;
    broken.edge_colours[{0, 1}] = {{0, 2}};
    std::string bpath = write_temp("k4.broken.json", rlab::rigid_partition_to_json(broken));
    CHECK(run("partition verify --input " + gpath + " --partition " + bpath).exit_code == 1);
}

TEST_CASE("partition convert consumes source JSON") {
    rlab::Graph k6 = rlab::Graph::complete(6);
    std::string gpath = write_temp("k6.edges", rlab::write_graph_text(k6));
    std::string spath = write_temp(
        "k6.cds.json", rlab::cds_family_to_json(rlab::CdsFamily{2, {{0, 1}, {2, 3}, {4, 5}}}));
    RunResult r = run("partition convert --input " + gpath + " --source " + spath);
    CHECK(r.exit_code == 0);
    rlab::RigidPartition rp = rlab::rigid_partition_from_json(r.out);
    CHECK(rlab::verify_rigid_partition(k6, rp).accepted);
}

TEST_CASE("generators emit canonical graph text and respect seeds") {
    RunResult a = run("gen gnp --n 12 --p 0.5 --seed 9");
    RunResult b = run("gen gnp --n 12 --p 0.5 --seed 9");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    rlab::Graph g = rlab::parse_graph_text(a.out);
    CHECK(g.vertex_count() == 12);
    CHECK(rlab::write_graph_text(g) == a.out);

    RunResult reg = run("gen regular --n 10 --k 3 --seed 4");
    rlab::Graph rg = rlab::parse_graph_text(reg.out);
    for (int v = 0; v < 10; ++v) CHECK(rg.degree(v) == 3);
}

TEST_CASE("property subcommands report verdicts through exit codes") {
    std::string c5 = write_temp("c5.edges", rlab::write_graph_text(rlab::Graph::cycle(5)));
    CHECK(run("property sparse --input " + c5 + " --x 5 --y 1").exit_code == 0);
    std::string k4 = write_temp("k4b.edges", rlab::write_graph_text(rlab::Graph::complete(4)));
    RunResult viol = run("property sparse --input " + k4 + " --x 4 --y 1");
    CHECK(viol.exit_code == 1);
    CHECK(json::parse(viol.out)["kind"] == "Violated");
    RunResult jum = run("property jumbled --input " + k4);
    CHECK(jum.exit_code == 0);
    CHECK(json::parse(jum.out)["p"] == 0.75);
}

TEST_CASE("experiments stream canonical reports") {
    RunResult r = run("experiment hyperoctahedral --max-n 8 --seed 5");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "rigiditylab-report");
    CHECK(j["aggregate"]["mismatches"] == 0);
}
