#include "hcbench/exact_opt.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "hcbench/errors.hpp"

namespace hcbench {

namespace {

// Lexicographic order on vertex sets encoded as bitmasks (ascending vertex
// lists; a proper prefix sorts first).
bool lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    std::uint32_t diff = a ^ b;
    std::uint32_t k = diff & (~diff + 1);
    std::uint32_t above = ~(k | (k - 1));
    if (a & k) return (b & above) != 0;
    return (a & above) == 0;
}

struct DpTable {
    std::vector<double> value;
    std::vector<std::uint32_t> split;
};

DpTable solve(const Graph& g, const CostFunctionSpec& f, int cap) {
    int n = g.vertex_count();
    if (n < 1) throw contract_error("opt_cost needs n >= 1");
    if (n > cap)
        throw resource_cap_error("exact optimum refuses n=" + std::to_string(n) + " > cap " +
                                 std::to_string(cap));
    if (n > 24) throw resource_cap_error("exact optimum supports at most 24 vertices");

    auto adj = g.adjacency();
    std::uint32_t full = (1u << n) - 1;

    // internal[m] = total weight of edges with both endpoints in m.
    std::vector<double> internal(full + 1, 0.0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        int v = std::countr_zero(m);
        std::uint32_t rest = m & (m - 1);
        double into = 0.0;
        for (auto [u, w] : adj[v])
            if (rest & (1u << u)) into += w;
        internal[m] = internal[rest] + into;
    }

    std::vector<double> scale(n + 1, 0.0);
    for (int k = 2; k <= n; ++k) scale[k] = f.f(k);

    DpTable table;
    table.value.assign(full + 1, 0.0);
    table.split.assign(full + 1, 0);
    // Submask enumeration visits every subset of every mask once (3^n total).
    // Ascending masks guarantee both halves are already solved.
    for (std::uint32_t m = 1; m <= full; ++m) {
        if ((m & (m - 1)) == 0) continue; // singleton
        std::uint32_t low = m & (~m + 1);
        double cluster_scale = scale[std::popcount(m)];
        double best = 0.0;
        std::uint32_t best_split = 0;
        for (std::uint32_t s = (m - 1) & m; s; s = (s - 1) & m) {
            if (!(s & low)) continue; // each bipartition once
            std::uint32_t rest = m ^ s;
            double cut = internal[m] - internal[s] - internal[rest];
            double val = cut * cluster_scale + table.value[s] + table.value[rest];
            if (best_split == 0 || val < best ||
                (val == best && lex_less(s, best_split))) {
                best = val;
                best_split = s;
            }
        }
        table.value[m] = best;
        table.split[m] = best_split;
    }
    return table;
}

} // namespace

double opt_cost(const Graph& g, const CostFunctionSpec& f, int cap) {
    DpTable table = solve(g, f, cap);
    return table.value.back();
}

ClusterTree opt_tree(const Graph& g, const CostFunctionSpec& f, int cap) {
    DpTable table = solve(g, f, cap);
    TreeBuilder builder;
    std::function<int(std::uint32_t)> build = [&](std::uint32_t m) -> int {
        if ((m & (m - 1)) == 0) return builder.add_leaf(std::countr_zero(m));
        std::uint32_t s = table.split[m];
        int left = build(s);
        int right = build(m ^ s);
        return builder.add_internal({left, right});
    };
    std::uint32_t full = (1u << g.vertex_count()) - 1;
    return builder.finish(build(full));
}

} // namespace hcbench
