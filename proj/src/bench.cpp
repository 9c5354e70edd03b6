#include "hcbench/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hcbench/errors.hpp"
#include "hcbench/exact_opt.hpp"
#include "hcbench/hc_cost.hpp"
#include "hcbench/region_rounding.hpp"
#include "hcbench/rsc.hpp"
#include "hcbench/sdp_hc.hpp"

namespace hcbench {

namespace {

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        // trim
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

} // namespace

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    cfg.families.clear();
    cfg.sizes.clear();
    cfg.seeds.clear();
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) -> void {
        throw input_error("config line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line.substr(0, line.find('#'));
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            if (stripped.find_first_not_of(" \t\r") != std::string::npos)
                fail("expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r");
            std::size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        try {
            if (key == "families") {
                for (const auto& name : split_list(value))
                    cfg.families.push_back(family_from_name(name));
            } else if (key == "sizes") {
                for (const auto& s : split_list(value)) cfg.sizes.push_back(std::stoi(s));
            } else if (key == "seeds") {
                for (const auto& s : split_list(value)) cfg.seeds.push_back(std::stoull(s));
            } else if (key == "exact_cap") {
                cfg.exact_cap = std::stoi(value);
            } else if (key == "spectral_kind") {
                cfg.spectral_kind = oracle_kind_from_name(value);
                if (cfg.spectral_kind == OracleKind::exact) fail("spectral_kind must be spectral");
            } else if (key == "eig_tol") {
                cfg.eig_tol = std::stod(value);
            } else if (key == "eig_max_iter") {
                cfg.eig_max_iter = std::stoi(value);
            } else if (key == "f") {
                cfg.f_name = value;
                CostFunctionSpec::from_name(value); // validate
            } else if (key == "opt_cap") {
                cfg.opt_cap = std::stoi(value);
            } else if (key == "lp_max_n") {
                cfg.lp_max_n = std::stoi(value);
            } else if (key == "timeout_s") {
                cfg.timeout_s = std::stod(value);
            } else if (key == "threads") {
                cfg.threads = std::stoi(value);
            } else if (key == "csv_out") {
                cfg.csv_out = value;
            } else if (key == "json_out") {
                cfg.json_out = value;
            } else if (key == "pp_blocks") {
                cfg.pp_blocks = std::stoi(value);
            } else if (key == "pp_block_size") {
                cfg.pp_block_size = std::stoi(value);
            } else if (key == "pp_p_in") {
                cfg.pp_p_in = std::stod(value);
            } else if (key == "pp_p_out") {
                cfg.pp_p_out = std::stod(value);
            } else if (key == "dc_blocks") {
                cfg.dc_blocks = std::stoi(value);
            } else if (key == "dc_block_size") {
                cfg.dc_block_size = std::stoi(value);
            } else if (key == "er_p") {
                cfg.er_p = std::stod(value);
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const input_error&) {
            throw;
        } catch (const std::exception& e) {
            fail("bad value for '" + key + "': " + e.what());
        }
    }
    if (cfg.families.empty()) throw input_error("config: nothing to run (empty family list)");
    if (cfg.sizes.empty()) cfg.sizes.push_back(8);
    if (cfg.seeds.empty()) cfg.seeds.push_back(1);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);
    return parse_config(in);
}

namespace {

std::vector<GeneratorSpec> expand_instances(const RunConfig& cfg) {
    std::vector<GeneratorSpec> specs;
    for (auto family : cfg.families) {
        for (std::uint64_t seed : cfg.seeds) {
            GeneratorSpec spec;
            spec.family = family;
            spec.seed = seed;
            switch (family) {
                case GraphFamily::planted_partition:
                    spec.blocks = cfg.pp_blocks;
                    spec.block_size = cfg.pp_block_size;
                    spec.p_in = cfg.pp_p_in;
                    spec.p_out = cfg.pp_p_out;
                    specs.push_back(spec);
                    break;
                case GraphFamily::disjoint_cliques:
                    spec.blocks = cfg.dc_blocks;
                    spec.block_size = cfg.dc_block_size;
                    specs.push_back(spec);
                    break;
                default:
                    for (int n : cfg.sizes) {
                        spec.n = n;
                        spec.p = cfg.er_p;
                        specs.push_back(spec);
                    }
                    break;
            }
        }
    }
    return specs;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

std::string opt_field(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string();
}

struct InstanceRunner {
    const RunConfig& cfg;
    const GeneratorSpec& spec;
    std::string id;
    Graph graph;
    CostFunctionSpec f;
    std::chrono::steady_clock::time_point started;

    std::optional<double> opt_value;
    std::optional<double> lp_value;
    std::optional<double> sdp_bound;
    std::vector<RatioRow> rows;

    InstanceRunner(const RunConfig& c, const GeneratorSpec& s, std::string id_)
        : cfg(c), spec(s), id(std::move(id_)), graph(generate(s)),
          f(CostFunctionSpec::from_name(c.f_name)),
          started(std::chrono::steady_clock::now()) {}

    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }

    RatioRow base_row(const std::string& algorithm) const {
        RatioRow row;
        row.instance_id = id;
        row.n = graph.vertex_count();
        row.m = graph.edge_count();
        row.family = family_name(spec.family);
        row.spec = spec.to_string();
        row.algorithm = algorithm;
        return row;
    }

    template <typename Fn>
    void run_algorithm(const std::string& name, Fn&& body) {
        RatioRow row = base_row(name);
        if (elapsed_s() > cfg.timeout_s) {
            row.status = "timeout";
            rows.push_back(std::move(row));
            return;
        }
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(row);
            row.status = "ok";
        } catch (const std::exception& e) {
            row.status = std::string("error:") + e.what();
        }
        row.time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        rows.push_back(std::move(row));
    }

    void attach_ratios(RatioRow& row) const {
        row.opt_cost = opt_value;
        row.lp_bound = lp_value;
        row.sdp_lp_bound = sdp_bound;
        if (row.cost && opt_value && *opt_value > 0.0) row.ratio_vs_opt = *row.cost / *opt_value;
        if (row.cost && lp_value && *lp_value > 0.0) row.ratio_vs_lp = *row.cost / *lp_value;
    }

    void run() {
        int n = graph.vertex_count();
        // Bounds first so cost rows can carry their ratios.
        if (cfg.opt_cap > 0 && n <= cfg.opt_cap) {
            run_algorithm("opt", [&](RatioRow& row) {
                opt_value = opt_cost(graph, f, cfg.opt_cap);
                row.cost = opt_value;
                attach_ratios(row);
            });
        }
        if (n <= cfg.lp_max_n && n >= 2) {
            run_algorithm("lp-bound", [&](RatioRow& row) {
                MetricSolution metric = solve_spreading_lp(graph, cfg.lp_max_n);
                if (metric.status != MetricSolution::Status::optimal)
                    throw contract_error("iteration limit");
                lp_value = metric.objective;
                attach_ratios(row);
            });
            run_algorithm("sdp-lp-bound", [&](RatioRow& row) {
                SdpLowerBound bound = sdp_lower_bound_lp(graph, f, cfg.lp_max_n);
                sdp_bound = bound.hc_lower_bound;
                attach_ratios(row);
            });
        }
        if (n <= cfg.exact_cap) {
            run_algorithm("rsc-exact", [&](RatioRow& row) {
                OracleSpec oracle;
                oracle.kind = OracleKind::exact;
                oracle.exact_cap = cfg.exact_cap;
                row.cost = rsc_cost(graph, oracle, f);
                attach_ratios(row);
            });
        }
        run_algorithm("rsc-spectral", [&](RatioRow& row) {
            OracleSpec oracle;
            oracle.kind = cfg.spectral_kind;
            oracle.eig_tol = cfg.eig_tol;
            oracle.eig_max_iter = cfg.eig_max_iter;
            row.cost = n >= 2 ? rsc_cost(graph, oracle, f) : 0.0;
            attach_ratios(row);
        });
        if (n <= cfg.lp_max_n) {
            run_algorithm("lp-round", [&](RatioRow& row) {
                RoundLpResult result = round_lp(graph, cfg.lp_max_n);
                row.cost = tree_cost_general(graph, result.tree, f);
                attach_ratios(row);
            });
        }
    }
};

int pool_size(const RunConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("HCBENCH_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

CompareResult run_compare(const RunConfig& cfg) {
    auto specs = expand_instances(cfg);
    if (specs.empty()) throw input_error("config: nothing to run");

    std::vector<std::vector<RatioRow>> buckets(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            char idbuf[32];
            std::snprintf(idbuf, sizeof(idbuf), "g%04zu", i);
            try {
                InstanceRunner runner(cfg, specs[i], idbuf);
                runner.run();
                buckets[i] = std::move(runner.rows);
            } catch (const std::exception& e) {
                RatioRow row;
                row.instance_id = idbuf;
                row.family = family_name(specs[i].family);
                row.spec = specs[i].to_string();
                row.algorithm = "generate";
                row.status = std::string("error:") + e.what();
                buckets[i] = {std::move(row)};
            }
        }
    };
    int workers = std::min<int>(pool_size(cfg), static_cast<int>(specs.size()));
    std::vector<std::thread> threads;
    for (int i = 1; i < workers; ++i) threads.emplace_back(worker);
    worker();
    for (auto& th : threads) th.join();

    CompareResult result;
    for (auto& bucket : buckets)
        for (auto& row : bucket) result.rows.push_back(std::move(row));

    // Summary: per-algorithm aggregates over ok rows.
    using nlohmann::ordered_json;
    ordered_json algos = ordered_json::object();
    for (const auto& row : result.rows) {
        if (!algos.contains(row.algorithm)) {
            algos[row.algorithm] = {{"rows", 0},
                                    {"failures", 0},
                                    {"max_ratio_vs_opt", nullptr},
                                    {"mean_ratio_vs_opt", nullptr},
                                    {"max_ratio_vs_lp", nullptr},
                                    {"mean_ratio_vs_lp", nullptr}};
        }
        auto& entry = algos[row.algorithm];
        entry["rows"] = entry["rows"].get<int>() + 1;
        if (row.status != "ok") entry["failures"] = entry["failures"].get<int>() + 1;
    }
    auto aggregate = [&](const char* key_max, const char* key_mean,
                         std::optional<double> RatioRow::*member) {
        for (auto& [name, entry] : algos.items()) {
            double best = 0.0, sum = 0.0;
            int count = 0;
            for (const auto& row : result.rows) {
                if (row.algorithm != name || row.status != "ok" || !(row.*member)) continue;
                double v = *(row.*member);
                best = std::max(best, v);
                sum += v;
                ++count;
            }
            if (count > 0) {
                entry[key_max] = best;
                entry[key_mean] = sum / count;
            }
        }
    };
    aggregate("max_ratio_vs_opt", "mean_ratio_vs_opt", &RatioRow::ratio_vs_opt);
    aggregate("max_ratio_vs_lp", "mean_ratio_vs_lp", &RatioRow::ratio_vs_lp);

    ordered_json summary;
    summary["schema"] = 1;
    summary["instances"] = specs.size();
    summary["f"] = cfg.f_name;
    summary["algorithms"] = algos;
    result.summary_json = summary.dump(2) + "\n";
    return result;
}

std::string rows_to_csv(const std::vector<RatioRow>& rows) {
    std::string out =
        "instance,n,m,family,spec,algorithm,status,cost,opt_cost,lp_bound,sdp_lp_bound,"
        "ratio_vs_opt,ratio_vs_lp,time_ms\n";
    for (const auto& row : rows) {
        out += csv_field(row.instance_id) + ",";
        out += std::to_string(row.n) + ",";
        out += std::to_string(row.m) + ",";
        out += csv_field(row.family) + ",";
        out += csv_field(row.spec) + ",";
        out += csv_field(row.algorithm) + ",";
        out += csv_field(row.status) + ",";
        out += opt_field(row.cost) + ",";
        out += opt_field(row.opt_cost) + ",";
        out += opt_field(row.lp_bound) + ",";
        out += opt_field(row.sdp_lp_bound) + ",";
        out += opt_field(row.ratio_vs_opt) + ",";
        out += opt_field(row.ratio_vs_lp) + ",";
        out += format_double(row.time_ms) + "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + path);
    out << content;
    if (!out) throw input_error("failed writing output file: " + path);
}

} // namespace hcbench
