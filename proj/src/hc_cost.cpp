#include "hcbench/hc_cost.hpp"

#include <cmath>

#include "hcbench/errors.hpp"

namespace hcbench {

double tree_cost(const Graph& g, const ClusterTree& tree) {
    return tree_cost_general(g, tree, CostFunctionSpec::identity());
}

double tree_cost_general(const Graph& g, const ClusterTree& tree, const CostFunctionSpec& f) {
    tree.validate_for(g.vertex_count());
    double total = 0.0;
    for (const auto& e : g.edges()) {
        int anc = tree.lca(e.u, e.v);
        total += e.w * f.f(tree.node(anc).leaf_count);
    }
    return total;
}

std::vector<int> level_cut_edges(const Graph& g, const ClusterTree& tree, int t) {
    tree.validate_for(g.vertex_count());
    if (t < 0 || t > g.vertex_count() - 1)
        throw contract_error("level t=" + std::to_string(t) + " out of range");
    auto block = tree.level_blocks(t);
    std::vector<int> out;
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (block[edges[i].u] != block[edges[i].v]) out.push_back(i);
    }
    return out;
}

LevelIdentityResult check_level_identity(const Graph& g, const ClusterTree& tree,
                                         const CostFunctionSpec& f) {
    tree.validate_for(g.vertex_count());
    int n = g.vertex_count();
    const auto& edges = g.edges();
    LevelIdentityResult res;
    for (int t = 0; t <= n - 1; ++t) {
        auto cut = level_cut_edges(g, tree, t);
        double weight = 0.0;
        for (int idx : cut) weight += edges[idx].w;
        res.lhs += weight * f.g(t);
    }
    res.rhs = tree_cost_general(g, tree, f);
    res.equal = std::abs(res.lhs - res.rhs) <= 1e-9;
    return res;
}

} // namespace hcbench
