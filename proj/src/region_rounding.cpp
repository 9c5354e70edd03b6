#include "hcbench/region_rounding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "hcbench/errors.hpp"
#include "hcbench/hc_cost.hpp"

namespace hcbench {

namespace {

std::vector<double> dijkstra(const Graph& g, const std::vector<double>& length, int source) {
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].u].emplace_back(edges[i].v, length[i]);
        adj[edges[i].v].emplace_back(edges[i].u, length[i]);
    }
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        for (auto [u, len] : adj[v]) {
            double nd = d + len;
            if (nd < dist[u]) {
                dist[u] = nd;
                heap.push({nd, u});
            }
        }
    }
    return dist;
}

int farthest(const std::vector<double>& dist) {
    int best = 0;
    for (int v = 1; v < static_cast<int>(dist.size()); ++v)
        if (dist[v] > dist[best]) best = v;
    return best;
}

} // namespace

VolumeState make_volume_state(Graph sub, std::vector<double> length, double phi_seed) {
    int n = sub.vertex_count();
    if (n < 2) throw contract_error("ball cutting needs >= 2 vertices");
    VolumeState state;
    state.phi_seed = phi_seed;
    state.phi_total = phi_seed * n;
    for (std::size_t i = 0; i < length.size(); ++i)
        state.phi_total += sub.edges()[i].w * length[i];

    auto first = dijkstra(sub, length, 0);
    int u = farthest(first);
    auto from_u = dijkstra(sub, length, u);
    int x = farthest(from_u);
    if (std::isinf(from_u[x])) throw contract_error("ball cutting needs a connected subgraph");
    state.center = u;
    state.diameter = from_u[x];
    state.dist = std::move(from_u);
    state.sub = std::move(sub);
    state.length = std::move(length);
    return state;
}

BallCut find_ball_cut(const VolumeState& state) {
    if (!(state.diameter > 0.0)) throw contract_error("find_ball_cut needs positive diameter");
    if (!(state.phi_seed > 0.0)) throw contract_error("find_ball_cut needs positive node volume");
    int n = state.sub.vertex_count();
    double rmax = state.diameter / 4.0;

    // Event radii: distances at which the ball gains a vertex, clipped to
    // [0, diameter/4], plus midpoints between consecutive candidates and the
    // right endpoint. The midpoints are what make the logarithmic volume
    // argument go through with the constant 8.
    std::vector<double> events;
    for (int v = 0; v < n; ++v)
        if (state.dist[v] <= rmax) events.push_back(state.dist[v]);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    if (events.back() < rmax) events.push_back(rmax);
    std::vector<double> radii;
    for (std::size_t i = 0; i < events.size(); ++i) {
        radii.push_back(events[i]);
        if (i + 1 < events.size()) radii.push_back(0.5 * (events[i] + events[i + 1]));
    }

    const auto& edges = state.sub.edges();
    auto evaluate = [&](double r, BallCut& out) {
        out.center = state.center;
        out.radius = r;
        out.side.clear();
        std::vector<char> in(n, 0);
        for (int v = 0; v < n; ++v) {
            if (state.dist[v] <= r) {
                in[v] = 1;
                out.side.push_back(v);
            }
        }
        double cut = 0.0;
        double volume = state.phi_seed * static_cast<double>(out.side.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            bool iu = in[e.u], iv = in[e.v];
            if (iu && iv) {
                volume += e.w * state.length[i];
            } else if (iu || iv) {
                cut += e.w;
                double inside = iu ? state.dist[e.u] : state.dist[e.v];
                volume += e.w * (r - inside);
            }
        }
        out.cut_weight = cut;
        out.ball_volume = volume;
    };

    BallCut best, probe;
    bool have = false;
    for (double r : radii) {
        evaluate(r, probe);
        if (probe.side.empty() || static_cast<int>(probe.side.size()) >= n) continue;
        double ratio = probe.cut_weight / probe.ball_volume;
        double best_ratio = have ? best.cut_weight / best.ball_volume : 0.0;
        if (!have || ratio < best_ratio || (ratio == best_ratio && probe.radius < best.radius)) {
            best = probe;
            have = true;
        }
    }
    if (!have) throw contract_error("find_ball_cut found no proper ball");

    double bound = 8.0 *
                   std::log((state.phi_total + state.phi_seed * n) / state.phi_seed) /
                   state.diameter * best.ball_volume;
    if (!(best.cut_weight <= bound * (1.0 + 1e-9) + 1e-12))
        throw contract_error("ball-cut volume bound violated");
    return best;
}

namespace {

struct Decomposer {
    const Graph& g;
    const MetricSolution& metric;
    double phi_seed;
    TreeBuilder builder;

    int recurse(const std::vector<int>& vertices) {
        if (vertices.size() == 1) return builder.add_leaf(vertices[0]);
        Graph sub = induced_subgraph(g, vertices);
        auto comps = connected_components(sub);
        std::vector<int> local_side;
        if (comps.size() > 1) {
            std::size_t pick = 0;
            for (std::size_t i = 1; i < comps.size(); ++i)
                if (comps[i].size() > comps[pick].size()) pick = i;
            local_side = comps[pick];
        } else {
            std::vector<double> length(sub.edges().size());
            for (std::size_t i = 0; i < length.size(); ++i) {
                const auto& e = sub.edges()[i];
                length[i] = metric.at(vertices[e.u], vertices[e.v]);
            }
            VolumeState state = make_volume_state(std::move(sub), std::move(length), phi_seed);
            if (state.diameter > 0.0) {
                local_side = find_ball_cut(state).side;
            } else {
                // All in-part distances are zero: fall back to a balanced
                // split by vertex id.
                for (int i = 0; i < static_cast<int>(vertices.size()) / 2; ++i)
                    local_side.push_back(i);
            }
        }
        std::vector<char> in(vertices.size(), 0);
        for (int v : local_side) in[v] = 1;
        std::vector<int> side, rest;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            (in[i] ? side : rest).push_back(vertices[i]);
        int left = recurse(side);
        int right = recurse(rest);
        return builder.add_internal({left, right});
    }
};

} // namespace

ClusterTree decompose(const Graph& g, const MetricSolution& metric) {
    int n = g.vertex_count();
    if (n < 1) throw contract_error("decompose needs n >= 1");
    if (metric.n != n) throw contract_error("metric size mismatch");
    double phi = 0.0;
    for (const auto& e : g.edges()) phi += e.w * metric.at(e.u, e.v);
    Decomposer dec{g, metric, phi / n, {}};
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    int root = dec.recurse(all);
    return dec.builder.finish(root);
}

RoundLpResult round_lp(const Graph& g, int lp_max_n) {
    int n = g.vertex_count();
    if (n < 1) throw contract_error("round_lp needs n >= 1");
    RoundLpResult result;
    if (n == 1) {
        TreeBuilder builder;
        int leaf = builder.add_leaf(0);
        result.tree = builder.finish(leaf);
        result.metric = MetricSolution::zero(1);
        return result;
    }
    result.metric = solve_spreading_lp(g, lp_max_n);
    if (result.metric.status != MetricSolution::Status::optimal)
        throw contract_error("spreading LP hit its iteration limit");
    result.lp_value = result.metric.objective;
    result.tree = decompose(g, result.metric);
    result.tree_cost = tree_cost(g, result.tree);
    return result;
}

} // namespace hcbench
