#ifndef HCBENCH_BENCH_HPP
#define HCBENCH_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hcbench/cut_oracles.hpp"
#include "hcbench/graph.hpp"

namespace hcbench {

/// Plain key=value experiment configuration; '#' starts comments and unknown
/// keys are errors.
struct RunConfig {
    std::vector<GraphFamily> families;
    std::vector<int> sizes{8};
    std::vector<std::uint64_t> seeds{1};

    int exact_cap = 20;
    OracleKind spectral_kind = OracleKind::spectral_plus_local;
    double eig_tol = 1e-8;
    int eig_max_iter = 10000;

    std::string f_name = "identity";
    int opt_cap = 16;
    int lp_max_n = 30;
    double timeout_s = 60.0;
    int threads = 0; // 0: HCBENCH_THREADS env, then hardware
    std::string csv_out = "compare.csv";
    std::string json_out = "compare.json";

    // family-specific parameters
    int pp_blocks = 2;
    int pp_block_size = 4;
    double pp_p_in = 1.0;
    double pp_p_out = 0.1;
    int dc_blocks = 2;
    int dc_block_size = 3;
    double er_p = 0.5;
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

/// One CSV row: an (instance, algorithm) result. Bound-style algorithms leave
/// `cost` empty and fill their bound column instead.
struct RatioRow {
    std::string instance_id;
    int n = 0;
    int m = 0;
    std::string family;
    std::string spec;
    std::string algorithm;
    std::string status; // ok | error:<what> | timeout
    std::optional<double> cost;
    std::optional<double> opt_cost;
    std::optional<double> lp_bound;
    std::optional<double> sdp_lp_bound;
    std::optional<double> ratio_vs_opt;
    std::optional<double> ratio_vs_lp;
    double time_ms = 0.0;
};

struct CompareResult {
    std::vector<RatioRow> rows;
    std::string summary_json; // schema 1
};

/// Expands the config into instances, runs every applicable algorithm on a
/// worker pool, and buffers rows in instance order so the output does not
/// depend on scheduling.
CompareResult run_compare(const RunConfig& config);

/// RFC-4180-style CSV (fields quoted when needed); the wall-time column is
/// last so determinism checks can strip it.
std::string rows_to_csv(const std::vector<RatioRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

} // namespace hcbench

#endif
