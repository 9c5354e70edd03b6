#ifndef HCBENCH_TEST_SUPPORT_HPP
#define HCBENCH_TEST_SUPPORT_HPP

#include <algorithm>
#include <limits>
#include <vector>

#include "hcbench/cost_function.hpp"
#include "hcbench/graph.hpp"
#include "hcbench/rng.hpp"
#include "hcbench/tree.hpp"

namespace hcbench::test {

inline Graph make_graph(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

inline Graph k2() { return make_graph(2, {{0, 1, 1}}); }
inline Graph k3() { return make_graph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}); }
inline Graph k4() {
    return make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}
inline Graph p3() { return make_graph(3, {{0, 1, 1}, {1, 2, 1}}); }
inline Graph p4() { return make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }
inline Graph two_k2() { return make_graph(4, {{0, 1, 1}, {2, 3, 1}}); }
inline Graph star4() { return make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}); }

// Independent oracle: minimum generalized cost over all binary trees by plain
// recursive enumeration of bipartitions, no memoization. Usable up to n ~ 7.
inline double enumerate_min_cost(const Graph& g, const std::vector<int>& verts,
                                 const CostFunctionSpec& f) {
    if (verts.size() <= 1) return 0.0;
    double scale = f.f(static_cast<int>(verts.size()));
    double best = std::numeric_limits<double>::infinity();
    int k = static_cast<int>(verts.size());
    std::vector<char> pick(k, 0);
    // Subsets of verts containing verts[0], proper.
    for (unsigned long mask = 0; mask + 1 < (1ul << (k - 1)); ++mask) {
        std::vector<int> a{verts[0]}, b;
        for (int i = 1; i < k; ++i)
            ((mask >> (i - 1)) & 1 ? a : b).push_back(verts[i]);
        double cut = 0.0;
        for (const auto& e : g.edges()) {
            bool ua = std::find(a.begin(), a.end(), e.u) != a.end();
            bool ub = std::find(b.begin(), b.end(), e.u) != b.end();
            bool va = std::find(a.begin(), a.end(), e.v) != a.end();
            bool vb = std::find(b.begin(), b.end(), e.v) != b.end();
            if ((ua && vb) || (ub && va)) cut += e.w;
        }
        double total =
            cut * scale + enumerate_min_cost(g, a, f) + enumerate_min_cost(g, b, f);
        best = std::min(best, total);
    }
    return best;
}

inline double enumerate_min_cost(const Graph& g, const CostFunctionSpec& f) {
    std::vector<int> verts(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) verts[v] = v;
    return enumerate_min_cost(g, verts, f);
}

// Random k-ary tree over 0..n-1 (arity 2..4 where the cluster allows).
inline ClusterTree random_tree(int n, Rng& rng, int max_arity = 4) {
    TreeBuilder builder;
    struct Build {
        TreeBuilder& builder;
        Rng& rng;
        int max_arity;
        int operator()(std::vector<int> verts) {
            if (verts.size() == 1) return builder.add_leaf(verts[0]);
            // Deterministic shuffle, then split into k consecutive nonempty runs.
            for (int i = static_cast<int>(verts.size()) - 1; i > 0; --i)
                std::swap(verts[i], verts[rng.next_int(0, i)]);
            int k = rng.next_int(2, std::min<int>(max_arity, static_cast<int>(verts.size())));
            std::vector<int> sizes(k, 1);
            for (int extra = static_cast<int>(verts.size()) - k; extra > 0; --extra)
                ++sizes[rng.next_int(0, k - 1)];
            std::vector<int> children;
            std::size_t at = 0;
            for (int part = 0; part < k; ++part) {
                std::vector<int> sub(verts.begin() + at, verts.begin() + at + sizes[part]);
                at += sizes[part];
                children.push_back((*this)(std::move(sub)));
            }
            return builder.add_internal(children);
        }
    };
    Build build{builder, rng, max_arity};
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    int root = build(std::move(verts));
    return builder.finish(root);
}

inline ClusterTree random_binary_tree(int n, Rng& rng) { return random_tree(n, rng, 2); }

inline Graph random_graph(int n, Rng& rng, double p = 0.5, bool unit_weights = true) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) {
                double w = unit_weights ? 1.0 : 0.25 + 2.0 * rng.next_double();
                edges.push_back({u, v, w});
            }
    return Graph(n, std::move(edges));
}

inline Graph random_connected_graph(int n, Rng& rng, double p = 0.5) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = random_graph(n, rng, p);
        if (connected_components(g).size() == 1) return g;
    }
    // Fall back to a path plus random chords.
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
    return Graph(n, std::move(edges));
}

} // namespace hcbench::test

#endif
