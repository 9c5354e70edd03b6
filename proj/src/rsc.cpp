#include "hcbench/rsc.hpp"

#include <algorithm>
#include <utility>

#include "hcbench/errors.hpp"
#include "hcbench/hc_cost.hpp"

namespace hcbench {

namespace {

// Splits one cluster: zero-weight component cut when disconnected, otherwise
// the oracle's cut of the induced subgraph. Returns (small side, large side)
// as original vertex ids and fills the trace record.
std::pair<std::vector<int>, std::vector<int>> split_cluster(const Graph& g,
                                                            const std::vector<int>& cluster,
                                                            const OracleSpec& oracle,
                                                            SplitRecord& rec) {
    Graph sub = induced_subgraph(g, cluster);
    auto comps = connected_components(sub);
    std::vector<int> local_side;
    double cut_weight = 0.0, cut_sparsity = 0.0;
    if (comps.size() > 1) {
        // Largest component versus the rest; ties go to the component
        // containing the smallest vertex (components come in that order).
        std::size_t best = 0;
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() > comps[best].size()) best = i;
        local_side = comps[best];
    } else {
        Cut cut = oracle_cut(sub, oracle);
        local_side = cut.side;
        cut_weight = cut.cross_weight;
        cut_sparsity = cut.sparsity;
    }

    std::vector<char> in(sub.vertex_count(), 0);
    for (int v : local_side) in[v] = 1;
    std::vector<int> side_a, side_b;
    for (int i = 0; i < sub.vertex_count(); ++i)
        (in[i] ? side_a : side_b).push_back(cluster[i]);
    if (side_a.size() > side_b.size()) side_a.swap(side_b);

    int r = static_cast<int>(cluster.size());
    rec.cluster_size = r;
    rec.small_side_size = static_cast<int>(side_a.size());
    rec.cut_weight = cut_weight;
    rec.sparsity = cut_sparsity;
    rec.charge_lo = r / 4;
    rec.charge_hi = r / 2;
    rec.small_side = side_a;
    return {std::move(side_a), std::move(side_b)};
}

} // namespace

RscResult rsc_build(const Graph& g, const OracleSpec& oracle) {
    int n = g.vertex_count();
    if (n < 1) throw contract_error("rsc_build needs n >= 1");

    TreeBuilder builder;
    std::vector<SplitRecord> trace;

    // Explicit work stack instead of recursion so deep (path-like) trees do
    // not hit call-depth limits. A Split task expands a cluster; a Combine
    // task joins the two node ids most recently produced.
    struct Task {
        bool combine = false;
        std::vector<int> cluster;
    };
    std::vector<Task> work;
    std::vector<int> built; // node-id stack

    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    work.push_back({false, std::move(all)});

    while (!work.empty()) {
        Task task = std::move(work.back());
        work.pop_back();
        if (task.combine) {
            int right = built.back();
            built.pop_back();
            int left = built.back();
            built.pop_back();
            built.push_back(builder.add_internal({left, right}));
            continue;
        }
        if (task.cluster.size() == 1) {
            built.push_back(builder.add_leaf(task.cluster[0]));
            continue;
        }
        SplitRecord rec;
        auto [small, large] = split_cluster(g, task.cluster, oracle, rec);
        trace.push_back(std::move(rec));
        work.push_back({true, {}});
        work.push_back({false, std::move(large)});
        work.push_back({false, std::move(small)});
    }

    RscResult result;
    result.tree = builder.finish(built.back());
    result.trace = std::move(trace);
    return result;
}

double rsc_cost(const Graph& g, const OracleSpec& oracle, const CostFunctionSpec& f) {
    return tree_cost_general(g, rsc_build(g, oracle).tree, f);
}

} // namespace hcbench
