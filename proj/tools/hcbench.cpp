#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hcbench/bench.hpp"
#include "hcbench/errors.hpp"
#include "hcbench/exact_opt.hpp"
#include "hcbench/hc_cost.hpp"
#include "hcbench/region_rounding.hpp"
#include "hcbench/rsc.hpp"
#include "hcbench/sdp_hc.hpp"
#include "hcbench/spreading_lp.hpp"

namespace {

using namespace hcbench;

CostFunctionSpec load_cost_function(const std::string& name) {
    const std::string prefix = "table:";
    if (name.rfind(prefix, 0) == 0) {
        std::ifstream in(name.substr(prefix.size()));
        if (!in) throw input_error("cannot open cost-function table: " + name.substr(prefix.size()));
        std::vector<double> values;
        double v;
        while (in >> v) values.push_back(v);
        return CostFunctionSpec::table(std::move(values));
    }
    return CostFunctionSpec::from_name(name);
}

void write_or_print_tree(const ClusterTree& tree, const std::string& out_path, bool json) {
    std::string text = json ? tree.to_json() : tree.to_parens();
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        write_text_file(out_path, text + "\n");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"hierarchical clustering approximation benchmark"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph instance");
    GeneratorSpec spec;
    std::string family_str = "clique";
    std::string gen_out;
    gen->add_option("--family", family_str, "clique|path|star|cycle|disjoint_cliques|planted_partition|erdos_renyi");
    gen->add_option("--n", spec.n, "vertex count (single-block families)");
    gen->add_option("--blocks", spec.blocks, "block count");
    gen->add_option("--block-size", spec.block_size, "vertices per block");
    gen->add_option("--p-in", spec.p_in, "intra-block edge probability");
    gen->add_option("--p-out", spec.p_out, "inter-block edge probability");
    gen->add_option("--p", spec.p, "edge probability (erdos_renyi)");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->add_option("-o,--out", gen_out, "output file (stdout when absent)");

    // cost
    auto* cost_cmd = app.add_subcommand("cost", "evaluate a tree against a graph");
    std::string graph_path, tree_path, f_name = "identity";
    cost_cmd->add_option("-g,--graph", graph_path)->required();
    cost_cmd->add_option("-t,--tree", tree_path)->required();
    cost_cmd->add_option("--f", f_name, "identity|square|log1p|table:<path>");

    // rsc
    auto* rsc_cmd = app.add_subcommand("rsc", "recursive sparsest cut");
    std::string rsc_graph, rsc_out, rsc_trace, rsc_f = "identity";
    std::string oracle_str = "exact";
    OracleSpec oracle;
    bool rsc_json = false;
    rsc_cmd->add_option("-g,--graph", rsc_graph)->required();
    rsc_cmd->add_option("--oracle", oracle_str, "exact|spectral_sweep|spectral_plus_local");
    rsc_cmd->add_option("--exact-cap", oracle.exact_cap);
    rsc_cmd->add_option("--eig-tol", oracle.eig_tol);
    rsc_cmd->add_option("--eig-max-iter", oracle.eig_max_iter);
    rsc_cmd->add_option("--f", rsc_f);
    rsc_cmd->add_option("-o,--out", rsc_out, "tree output file");
    rsc_cmd->add_flag("--json", rsc_json, "emit the tree as JSON");
    rsc_cmd->add_option("--trace", rsc_trace, "split trace CSV output");

    // opt
    auto* opt_cmd = app.add_subcommand("opt", "exact optimum by subset DP");
    std::string opt_graph, opt_out, opt_f = "identity";
    int opt_cap = kDefaultOptCap;
    bool opt_json = false;
    opt_cmd->add_option("-g,--graph", opt_graph)->required();
    opt_cmd->add_option("--f", opt_f);
    opt_cmd->add_option("--cap", opt_cap, "largest n accepted");
    opt_cmd->add_option("-o,--out", opt_out, "tree output file");
    opt_cmd->add_flag("--json", opt_json, "emit the tree as JSON");

    // lp-bound
    auto* lp_cmd = app.add_subcommand("lp-bound", "spreading-metric LP lower bound");
    std::string lp_graph, lp_metric_out;
    int lp_max_n = 30;
    lp_cmd->add_option("-g,--graph", lp_graph)->required();
    lp_cmd->add_option("--max-n", lp_max_n);
    lp_cmd->add_option("--metric-out", lp_metric_out, "pairwise metric CSV (u,v,d)");

    // round-lp
    auto* round_cmd = app.add_subcommand("round-lp", "LP solve + ball-growing rounding");
    std::string round_graph, round_out;
    int round_max_n = 30;
    bool round_json = false;
    round_cmd->add_option("-g,--graph", round_graph)->required();
    round_cmd->add_option("--max-n", round_max_n);
    round_cmd->add_option("-o,--out", round_out, "tree output file");
    round_cmd->add_flag("--json", round_json, "emit the tree as JSON");

    // sdp-export
    auto* sdpe_cmd = app.add_subcommand("sdp-export", "write the level relaxation instance");
    std::string sdpe_graph, sdpe_out, sdpe_f = "identity";
    sdpe_cmd->add_option("-g,--graph", sdpe_graph)->required();
    sdpe_cmd->add_option("--f", sdpe_f);
    sdpe_cmd->add_option("-o,--out", sdpe_out)->required();

    // sdp-validate
    auto* sdpv_cmd = app.add_subcommand("sdp-validate", "check an assignment file");
    std::string sdpv_graph, sdpv_assignment, sdpv_f = "identity";
    double sdpv_tol = 1e-6;
    sdpv_cmd->add_option("-g,--graph", sdpv_graph)->required();
    sdpv_cmd->add_option("--assignment", sdpv_assignment, "lines 'i j t value'")->required();
    sdpv_cmd->add_option("--f", sdpv_f);
    sdpv_cmd->add_option("--tol", sdpv_tol);

    // sdp-bound
    auto* sdpb_cmd = app.add_subcommand("sdp-bound", "LP surrogate lower bound");
    std::string sdpb_graph, sdpb_f = "identity";
    int sdpb_max_n = 30;
    sdpb_cmd->add_option("-g,--graph", sdpb_graph)->required();
    sdpb_cmd->add_option("--f", sdpb_f);
    sdpb_cmd->add_option("--max-n", sdpb_max_n);

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "run the benchmark harness");
    std::string cmp_config;
    int cmp_threads = 0;
    cmp_cmd->add_option("--config", cmp_config)->required();
    cmp_cmd->add_option("--threads", cmp_threads, "overrides config and HCBENCH_THREADS");

    CLI11_PARSE(app, argc, argv);

    if (*gen) {
        spec.family = family_from_name(family_str);
        Graph g = generate(spec);
        std::string text = serialize_edge_list(g);
        if (gen_out.empty()) {
            std::cout << text;
        } else {
            write_text_file(gen_out, text);
        }
        return 0;
    }

    if (*cost_cmd) {
        Graph g = parse_edge_list_file(graph_path);
        ClusterTree tree = parse_tree_file(tree_path);
        double value = tree_cost_general(g, tree, load_cost_function(f_name));
        std::printf("%.12g\n", value);
        return 0;
    }

    if (*rsc_cmd) {
        Graph g = parse_edge_list_file(rsc_graph);
        oracle.kind = oracle_kind_from_name(oracle_str);
        RscResult result = rsc_build(g, oracle);
        double value = tree_cost_general(g, result.tree, load_cost_function(rsc_f));
        std::printf("%.12g\n", value);
        write_or_print_tree(result.tree, rsc_out, rsc_json);
        if (!rsc_trace.empty()) {
            std::string csv = "cluster_size,small_side_size,cut_weight,sparsity,charge_lo,charge_hi\n";
            for (const auto& rec : result.trace) {
                csv += std::to_string(rec.cluster_size) + "," +
                       std::to_string(rec.small_side_size) + "," + format_double(rec.cut_weight) +
                       "," + format_double(rec.sparsity) + "," + std::to_string(rec.charge_lo) +
                       "," + std::to_string(rec.charge_hi) + "\n";
            }
            write_text_file(rsc_trace, csv);
        }
        return 0;
    }

    if (*opt_cmd) {
        Graph g = parse_edge_list_file(opt_graph);
        CostFunctionSpec f = load_cost_function(opt_f);
        ClusterTree tree = opt_tree(g, f, opt_cap);
        std::printf("%.12g\n", tree_cost_general(g, tree, f));
        write_or_print_tree(tree, opt_out, opt_json);
        return 0;
    }

    if (*lp_cmd) {
        Graph g = parse_edge_list_file(lp_graph);
        MetricSolution metric = solve_spreading_lp(g, lp_max_n);
        if (metric.status != MetricSolution::Status::optimal)
            throw contract_error("spreading LP hit its iteration limit");
        std::printf("lp_value %.12g\n", metric.objective);
        if (!lp_metric_out.empty()) {
            std::string csv = "u,v,d\n";
            for (int u = 0; u < metric.n; ++u)
                for (int v = u + 1; v < metric.n; ++v)
                    csv += std::to_string(u) + "," + std::to_string(v) + "," +
                           format_double(metric.at(u, v)) + "\n";
            write_text_file(lp_metric_out, csv);
        }
        return 0;
    }

    if (*round_cmd) {
        Graph g = parse_edge_list_file(round_graph);
        RoundLpResult result = round_lp(g, round_max_n);
        double ratio = result.lp_value > 0 ? result.tree_cost / result.lp_value : 0.0;
        std::printf("lp_value %.12g tree_cost %.12g ratio %.12g\n", result.lp_value,
                    result.tree_cost, ratio);
        if (!round_out.empty()) write_or_print_tree(result.tree, round_out, round_json);
        return 0;
    }

    if (*sdpe_cmd) {
        Graph g = parse_edge_list_file(sdpe_graph);
        export_instance_file(build_instance(g, load_cost_function(sdpe_f)), sdpe_out);
        return 0;
    }

    if (*sdpv_cmd) {
        Graph g = parse_edge_list_file(sdpv_graph);
        SdpInstance inst = build_instance(g, load_cost_function(sdpv_f));
        SdpAssignment a = parse_assignment_file(sdpv_assignment, g.vertex_count());
        ValidationReport report = validate(inst, a, sdpv_tol);
        for (const auto& fam : report.families)
            std::printf("%-12s worst %.6g violations %ld\n", fam.name.c_str(), fam.worst,
                        fam.count);
        std::printf("objective %.12g\n", report.objective);
        std::printf("%s\n", report.pass ? "PASS" : "FAIL");
        if (!report.pass) throw contract_error("assignment infeasible at tolerance");
        return 0;
    }

    if (*sdpb_cmd) {
        Graph g = parse_edge_list_file(sdpb_graph);
        SdpLowerBound bound = sdp_lower_bound_lp(g, load_cost_function(sdpb_f), sdpb_max_n);
        std::printf("lp_value %.12g, hc_lower_bound %.12g\n", bound.lp_value,
                    bound.hc_lower_bound);
        return 0;
    }

    if (*cmp_cmd) {
        RunConfig cfg = parse_config_file(cmp_config);
        if (cmp_threads > 0) cfg.threads = cmp_threads;
        CompareResult result = run_compare(cfg);
        write_text_file(cfg.csv_out, rows_to_csv(result.rows));
        write_text_file(cfg.json_out, result.summary_json);
        int ok = 0;
        for (const auto& row : result.rows)
            if (row.status == "ok") ++ok;
        std::printf("rows %zu ok %d csv %s json %s\n", result.rows.size(), ok,
                    cfg.csv_out.c_str(), cfg.json_out.c_str());
        if (ok == 0) throw contract_error("all rows failed");
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hcbench::resource_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const hcbench::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hcbench::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
