// rigiditylab: graph rigidity certificates, rigid partitions and the
// experiments around them. JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 verdict computed (positive where boolean), 1 negative
// verdict, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rlab/constructors.hpp"
#include "rlab/experiments.hpp"
#include "rlab/generators.hpp"
#include "rlab/graph.hpp"
#include "rlab/partition.hpp"
#include "rlab/properties.hpp"
#include "rlab/report.hpp"
#include "rlab/rigid_component.hpp"
#include "rlab/rigidity.hpp"

using json = nlohmann::json;
using namespace rlab;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) fail("StructuralError", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph_text(slurp(path)); }

void emit(const json& j, const std::string& format, const std::string& text_summary) {
    if (format == "json") std::cout << canonical_dump(j) << '\n';
    else std::cout << text_summary << '\n';
}

struct CommonFlags {
    std::string input;
    std::string format = "json";
    uint64_t seed = 1;
    int trials = 3;
    int dim = 2;
    double tol = kDefaultBoundTol;
};

json verdict_json(const RigidityVerdict& v) {
    return {{"kind", v.certified() ? "RigidCertified" : "ProbablyFlexible"},
            {"observed_rank", v.observed_rank},
            {"required_rank", v.required_rank},
            {"trials", v.trials}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph rigidity certificates and rigid-partition experiments"};
    app.require_subcommand(1);
    CommonFlags f;

    // rigidity test|number
    auto* rigidity_cmd = app.add_subcommand("rigidity", "rank certificates");
    rigidity_cmd->require_subcommand(1);
    auto* rigidity_test = rigidity_cmd->add_subcommand("test", "certify d-rigidity");
    auto* rigidity_num = rigidity_cmd->add_subcommand("number", "largest certified dimension");
    for (auto* cmd : {rigidity_test, rigidity_num}) {
        cmd->add_option("--input", f.input, "graph file (text format)")->required();
        cmd->add_option("--seed", f.seed, "rng seed");
        cmd->add_option("--trials", f.trials, "trials per dimension");
        cmd->add_option("--format", f.format, "json|text");
    }
    rigidity_test->add_option("--dim", f.dim, "dimension d")->required();

    // partition verify|convert|construct
    auto* partition_cmd = app.add_subcommand("partition", "rigid partitions");
    partition_cmd->require_subcommand(1);
    std::string partition_file, source_file, method = "sparse-connector";
    int exact_threshold = 0;
    int cbp_m = 0, cbp_n = 0;
    auto* par_verify = partition_cmd->add_subcommand("verify", "verify a rigid partition");
    par_verify->add_option("--input", f.input)->required();
    par_verify->add_option("--partition", partition_file)->required();
    par_verify->add_option("--exact-threshold", exact_threshold,
                           "also run the subset oracle on parts this small");
    par_verify->add_option("--format", f.format);
    auto* par_convert = partition_cmd->add_subcommand(
        "convert", "convert a strong partition or CDS family");
    par_convert->add_option("--input", f.input)->required();
    par_convert->add_option("--source", source_file, "strong partition / cds JSON")->required();
    par_convert->add_option("--format", f.format);
    auto* par_construct = partition_cmd->add_subcommand("construct", "randomized constructions");
    par_construct->add_option("--input", f.input, "graph file (unused for complete-bipartite)");
    par_construct
        ->add_option("--method", method,
                     "sparse-connector|bipartite|complete-bipartite|common-neighbour|dirac")
        ->required();
    par_construct->add_option("--dim", f.dim);
    par_construct->add_option("--seed", f.seed);
    par_construct->add_option("--m", cbp_m, "left side (complete-bipartite)");
    par_construct->add_option("--n", cbp_n, "right side (complete-bipartite)");
    par_construct->add_option("--format", f.format);

    // bound check
    auto* bound_cmd = app.add_subcommand("bound", "spectral partition bound");
    auto* bound_check = bound_cmd->add_subcommand("check", "evaluate the a(G_ij)/2 bound");
    bound_check->add_option("--input", f.input)->required();
    bound_check->add_option("--partition", partition_file)->required();
    bound_check->add_option("--tol", f.tol);
    bound_check->add_option("--format", f.format);

    // property sparse|connector|expander|jumbled
    auto* property_cmd = app.add_subcommand("property", "structural property checkers");
    property_cmd->require_subcommand(1);
    double px = 1, py = 1;
    int pk = 1;
    std::string mode = "auto";
    std::string side_a_csv;
    auto* prop_sparse = property_cmd->add_subcommand("sparse", "(x,y)-sparsity");
    prop_sparse->add_option("--x", px)->required();
    prop_sparse->add_option("--y", py)->required();
    auto* prop_conn = property_cmd->add_subcommand("connector", "K-connector");
    prop_conn->add_option("--k", pk)->required();
    auto* prop_exp = property_cmd->add_subcommand("expander", "R-expander");
    prop_exp->add_option("--r", pk)->required();
    auto* prop_jum = property_cmd->add_subcommand("jumbled", "spectral jumbledness certificate");
    for (auto* cmd : {prop_sparse, prop_conn, prop_exp, prop_jum}) {
        cmd->add_option("--input", f.input)->required();
        cmd->add_option("--format", f.format);
        if (cmd != prop_jum) {
            cmd->add_option("--mode", mode, "auto|exact|search");
            cmd->add_option("--seed", f.seed);
        }
    }

    // gen gnp|gnnp|gnm|regular|process
    auto* gen_cmd = app.add_subcommand("gen", "seeded random graph generators");
    gen_cmd->require_subcommand(1);
    int gn = 10, gk = 3;
    long long gm = 0;
    double gp = 0.5;
    bool multigraph = false;
    std::string output;
    auto* gen_gnp = gen_cmd->add_subcommand("gnp", "binomial graph");
    gen_gnp->add_option("--p", gp)->required();
    auto* gen_gnnp = gen_cmd->add_subcommand("gnnp", "binomial bipartite graph");
    gen_gnnp->add_option("--p", gp)->required();
    auto* gen_gnm = gen_cmd->add_subcommand("gnm", "uniform graph with m edges");
    gen_gnm->add_option("--m", gm)->required();
    auto* gen_reg = gen_cmd->add_subcommand("regular", "configuration-model regular graph");
    gen_reg->add_option("--k", gk)->required();
    gen_reg->add_flag("--multigraph", multigraph, "collapse instead of rejecting");
    auto* gen_proc = gen_cmd->add_subcommand("process", "graph process at the degree hitting time");
    gen_proc->add_option("--dim", f.dim, "degree target d")->required();
    for (auto* cmd : {gen_gnp, gen_gnnp, gen_gnm, gen_reg, gen_proc}) {
        cmd->add_option("--n", gn)->required();
        cmd->add_option("--seed", f.seed);
        cmd->add_option("--output", output, "write graph text here instead of stdout");
    }

    // experiment ...
    auto* exp_cmd = app.add_subcommand("experiment", "scripted experiments");
    exp_cmd->require_subcommand(1);
    int max_n = 16, max_mn = 12, max_d = 5, count = 200, etrials = 20;
    int hit_n = 300, giant_n = 2000;
    double C = 20.0;
    auto* exp_hit = exp_cmd->add_subcommand("hitting-time", "rigidity at the degree hitting time");
    exp_hit->add_option("--n", hit_n);
    exp_hit->add_option("--dim", f.dim);
    auto* exp_giant = exp_cmd->add_subcommand("giant", "greedy rigid growth in sparse graphs");
    exp_giant->add_option("--n", giant_n);
    exp_giant->add_option("--dim", f.dim);
    exp_giant->add_option("--C", C);
    auto* exp_table = exp_cmd->add_subcommand("bipartite-table", "complete bipartite rigidity table");
    exp_table->add_option("--max-n", max_mn);
    exp_table->add_option("--max-d", max_d);
    auto* exp_hyper = exp_cmd->add_subcommand("hyperoctahedral", "cocktail-party graph rigidity");
    exp_hyper->add_option("--max-n", max_n);
    auto* exp_bound = exp_cmd->add_subcommand("bound-survey", "partition bound survey");
    exp_bound->add_option("--count", count);
    exp_bound->add_option("--tol", f.tol);
    for (auto* cmd : {exp_hit, exp_giant, exp_table, exp_hyper, exp_bound}) {
        cmd->add_option("--seed", f.seed);
        cmd->add_option("--trials", etrials);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*rigidity_test) {
            Graph g = load_graph(f.input);
            RigidityVerdict v = randomized_rigidity_test(g, f.dim, f.trials, f.seed);
            std::ostringstream text;
            text << (v.certified() ? "RigidCertified" : "ProbablyFlexible") << " rank "
                 << v.observed_rank << "/" << v.required_rank;
            emit(verdict_json(v), f.format, text.str());
            return v.certified() ? 0 : 1;
        }
        if (*rigidity_num) {
            Graph g = load_graph(f.input);
            RigidityNumberResult r = rigidity_number(g, f.trials, f.seed);
            json j = {{"rigidity", r.number}};
            emit(j, f.format, "rigidity " + std::to_string(r.number));
            return 0;
        }
        if (*par_verify) {
            Graph g = load_graph(f.input);
            RigidPartition rp = rigid_partition_from_json(slurp(partition_file));
            VerifyResult res = verify_rigid_partition(g, rp, exact_threshold);
            json j = {{"accepted", res.accepted}};
            if (res.accepted) {
                j["hierarchy"] = json::parse(hierarchy_to_json(res.hierarchy));
                j["hierarchy_only_parts"] = res.hierarchy_only_parts;
            } else {
                j["reason"] = res.reason;
            }
            emit(j, f.format, res.accepted ? "Accepted" : "Rejected: " + res.reason);
            return res.accepted ? 0 : 1;
        }
        if (*par_convert) {
            Graph g = load_graph(f.input);
            std::string text = slurp(source_file);
            json src = json::parse(text);
            RigidPartition rp;
            if (src.value("kind", "") == "cds")
                rp = convert_to_rigid_partition(g, cds_family_from_json(text));
            else
                rp = convert_to_rigid_partition(g, strong_partition_from_json(text));
            emit(json::parse(rigid_partition_to_json(rp)), f.format, rigid_partition_to_json(rp));
            return 0;
        }
        if (*par_construct) {
            if (method == "complete-bipartite") {
                StrongPartition sp = complete_bipartite_partition(cbp_m, cbp_n, f.dim);
                emit(json::parse(strong_partition_to_json(sp)), f.format,
                     strong_partition_to_json(sp));
                return 0;
            }
            Graph g = load_graph(f.input);
            StrongConstruction sc;
            if (method == "sparse-connector")
                sc = strong_partition_via_sparse_connector(g, f.dim, f.seed);
            else if (method == "common-neighbour")
                sc = common_neighbour_partition(g, f.dim, f.seed);
            else if (method == "dirac")
                sc = dirac_strong_partition(g, f.seed).construction;
            else if (method == "bipartite") {
                // derive the bipartition from graph two-colouring
                auto comps = connected_components(g);
                std::vector<int> colour(g.vertex_count(), -1);
                for (const auto& comp : comps) {
                    colour[comp[0]] = 0;
                    std::vector<int> stack = {comp[0]};
                    while (!stack.empty()) {
                        int v = stack.back();
                        stack.pop_back();
                        for (int w : g.neighbours(v)) {
                            if (colour[w] < 0) {
                                colour[w] = colour[v] ^ 1;
                                stack.push_back(w);
                            } else
                                require(colour[w] != colour[v], "StructuralError",
                                        "graph is not bipartite");
                        }
                    }
                }
                std::vector<int> a, b;
                for (int v = 0; v < g.vertex_count(); ++v)
                    (colour[v] == 0 ? a : b).push_back(v);
                BipartiteGraph bg(g, VertexSubset(a), VertexSubset(b));
                sc = bipartite_strong_partition(bg, f.dim, f.seed);
            } else {
                fail("StructuralError", "unknown construction method: " + method);
            }
            json j = {{"success", sc.success}, {"attempts", sc.attempts}};
            if (sc.success) j["partition"] = json::parse(strong_partition_to_json(sc.partition));
            emit(j, f.format, sc.success ? "Partition" : "Failure");
            return sc.success ? 0 : 1;
        }
        if (*bound_check) {
            Graph g = load_graph(f.input);
            RigidPartition rp = rigid_partition_from_json(slurp(partition_file));
            VerifyResult res = verify_rigid_partition(g, rp);
            require(res.accepted, "StructuralError",
                    "partition rejected: " + res.reason);
            BoundReport br = quantitative_bound_check(g, rp, res.hierarchy, f.tol);
            json pairs = json::object();
            for (const auto& [key, a] : br.per_pair_a) {
                std::ostringstream name;
                name << (key.first + 1) << ',' << (key.second + 1);
                pairs[name.str()] = json_number(a);
            }
            json j = {{"holds", br.holds},
                      {"lambda_value", json_number(br.lambda_value)},
                      {"lambda_upper", json_number(br.lambda_upper)},
                      {"min_half_a", json_number(br.min_half_a)},
                      {"m_index", br.m_index},
                      {"mt_deviation", br.mt_deviation},
                      {"per_pair_a", pairs},
                      {"tol", br.tol}};
            std::ostringstream text;
            text << (br.holds ? "holds" : "fails") << " lambda " << br.lambda_value
                 << " bound " << br.min_half_a;
            emit(j, f.format, text.str());
            return br.holds ? 0 : 1;
        }
        if (*prop_sparse || *prop_conn || *prop_exp || *prop_jum) {
            Graph g = load_graph(f.input);
            if (*prop_jum) {
                auto [p, beta] = jumbled_certificate_regular(g);
                json j = {{"p", p}, {"beta", beta}};
                std::ostringstream text;
                text << "jumbled (" << p << ", " << beta << ")";
                emit(j, f.format, text.str());
                return 0;
            }
            CheckMode cm = mode == "exact" ? CheckMode::Exact
                           : mode == "search" ? CheckMode::RandomSearch
                                              : CheckMode::Auto;
            PropertyVerdict v;
            if (*prop_sparse) v = is_sparse(g, px, py, cm, f.seed);
            else if (*prop_conn) v = is_connector(g, pk, cm, f.seed);
            else v = is_expander(g, pk, cm, f.seed);
            const char* kind = v.kind == VerdictKind::Holds         ? "Holds"
                               : v.kind == VerdictKind::Violated    ? "Violated"
                                                                    : "NoViolationFound";
            json j = {{"kind", kind}, {"exact", v.exact}};
            if (!v.witness_a.empty()) j["witness_a"] = v.witness_a;
            if (!v.witness_b.empty()) j["witness_b"] = v.witness_b;
            emit(j, f.format, kind);
            return v.kind == VerdictKind::Violated ? 1 : 0;
        }
        if (*gen_gnp || *gen_gnnp || *gen_gnm || *gen_reg || *gen_proc) {
            Graph g;
            json meta;
            if (*gen_gnp) g = gnp(gn, gp, f.seed);
            else if (*gen_gnnp) g = gnnp(gn, gp, f.seed).graph;
            else if (*gen_gnm) g = gnm(gn, gm, f.seed);
            else if (*gen_reg) g = random_regular(gn, gk, f.seed, !multigraph).graph;
            else {
                ProcessSnapshot snap = process_hitting_time(gn, f.dim, f.seed);
                g = snap.graph;
                meta = {{"n", gn}, {"d", f.dim}, {"tau_d", snap.tau}, {"seed", f.seed}};
                std::cerr << canonical_dump(meta) << '\n';
            }
            std::string text = write_graph_text(g);
            if (output.empty()) std::cout << text;
            else std::ofstream(output) << text;
            return 0;
        }
        json report;
        if (*exp_hit) report = hitting_time_experiment(hit_n, f.dim, etrials, f.seed);
        else if (*exp_giant) report = giant_experiment(giant_n, f.dim, C, etrials, f.seed);
        else if (*exp_table) report = bipartite_table_experiment(max_mn, max_d, f.seed);
        else if (*exp_hyper) report = hyperoctahedral_experiment(max_n, 3, f.seed);
        else if (*exp_bound) report = bound_survey_experiment(count, f.seed, f.tol);
        else fail("StructuralError", "no subcommand selected");
        std::cout << canonical_dump(report) << '\n';
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
