#include "hcbench/spreading_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hcbench/errors.hpp"
#include "hcbench/hc_cost.hpp"
#include "hcbench/lp_solver.hpp"

namespace hcbench {

std::optional<SpreadingViolation> separation_oracle(int n, const MetricSolution& d) {
    if (d.n != n) throw contract_error("metric size mismatch");
    std::optional<SpreadingViolation> worst;
    std::vector<std::pair<double, int>> order(n);
    for (int v = 0; v < n; ++v) {
        // The center sits first with distance 0; the rest ascend by
        // (distance, id).
        int m = 0;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            order[m++] = {d.at(u, v), u};
        }
        std::sort(order.begin(), order.begin() + m);
        double sum = 0.0;
        for (int k = 2; k <= n; ++k) {
            sum += order[k - 2].first;
            double need = (static_cast<double>(k) * k - 1.0) / 4.0;
            double slack = sum - need;
            if (slack >= -1e-9) continue;
            if (!worst || slack < worst->slack) {
                SpreadingViolation viol;
                viol.center = v;
                viol.slack = slack;
                viol.prefix.push_back(v);
                for (int i = 0; i + 2 <= k; ++i) viol.prefix.push_back(order[i].second);
                std::sort(viol.prefix.begin(), viol.prefix.end());
                worst = std::move(viol);
            }
        }
    }
    return worst;
}

double worst_triangle_violation(const MetricSolution& d) {
    double worst = 0.0;
    int n = d.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dij = d.at(i, j);
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                worst = std::max(worst, dij - d.at(i, k) - d.at(j, k));
            }
        }
    return worst;
}

MetricSolution solve_spreading_lp(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n)
        throw resource_cap_error("spreading LP refuses n=" + std::to_string(n) + " > cap " +
                                 std::to_string(max_n));
    MetricSolution metric = MetricSolution::zero(n);
    if (n <= 1) return metric;

    // Any optimum can be clipped to (n^2-1)/4 + 1 per pair without breaking
    // a triangle or spreading constraint, so the finite upper bound below
    // loses nothing and keeps the optimal face bounded.
    double upper = (static_cast<double>(n) * n - 1.0) / 4.0 + 1.0;

    LpProblem lp;
    lp.num_vars = pair_count(n);
    lp.objective.assign(lp.num_vars, 0.0);
    lp.lower.assign(lp.num_vars, 0.75); // size-2 spreading constraints
    lp.upper.assign(lp.num_vars, upper);
    for (const auto& e : g.edges()) lp.objective[pair_index(n, e.u, e.v)] += e.w;

    // All triangle inequalities: d_ij <= d_ik + d_jk.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                std::vector<std::pair<int, double>> terms{
                    {pair_index(n, i, j), -1.0},
                    {pair_index(n, i, k), 1.0},
                    {pair_index(n, j, k), 1.0},
                };
                std::sort(terms.begin(), terms.end());
                lp.add_row(std::move(terms), 0.0);
            }

    std::set<std::vector<int>> added;
    int round_limit = 10 * n * n;
    bool certified = false;
    for (int round = 0; round < round_limit; ++round) {
        LpSolution sol = solve_lp(lp);
        for (int p = 0; p < lp.num_vars; ++p) metric.d[p] = sol.x[p];
        if (!sol.optimal) break;

        // One most-violated prefix per center per round; terminate when a
        // full oracle sweep passes.
        bool any_new = false;
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<double, int>> order;
            order.reserve(n - 1);
            for (int u = 0; u < n; ++u)
                if (u != v) order.push_back({metric.at(u, v), u});
            std::sort(order.begin(), order.end());
            double sum = 0.0;
            double worst_slack = 0.0;
            int worst_k = -1;
            for (int k = 2; k <= n; ++k) {
                sum += order[k - 2].first;
                double slack = sum - (static_cast<double>(k) * k - 1.0) / 4.0;
                if (slack < -1e-9 && (worst_k < 0 || slack < worst_slack)) {
                    worst_slack = slack;
                    worst_k = k;
                }
            }
            if (worst_k < 0) continue;
            std::vector<int> key{v};
            for (int i = 0; i + 2 <= worst_k; ++i) key.push_back(order[i].second);
            std::sort(key.begin() + 1, key.end());
            if (!added.insert(key).second) continue;
            std::vector<std::pair<int, double>> terms;
            for (std::size_t i = 1; i < key.size(); ++i)
                terms.push_back({pair_index(n, v, key[i]), 1.0});
            std::sort(terms.begin(), terms.end());
            double k = static_cast<double>(worst_k);
            lp.add_row(std::move(terms), (k * k - 1.0) / 4.0);
            any_new = true;
        }
        if (!any_new) {
            certified = !separation_oracle(n, metric).has_value();
            if (certified) break;
            // All violated prefixes were already in the pool: the inner solve
            // is not accurate enough to make progress.
            break;
        }
    }

    metric.objective = 0.0;
    for (const auto& e : g.edges()) metric.objective += e.w * metric.at(e.u, e.v);
    metric.status =
        certified ? MetricSolution::Status::optimal : MetricSolution::Status::iteration_limit;
    return metric;
}

bool check_ultrametric_feasible(const Graph& g, const ClusterTree& tree) {
    int n = g.vertex_count();
    tree.validate_for(n);
    MetricSolution metric = MetricSolution::zero(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            metric.slot(u, v) = static_cast<double>(tree.node(tree.lca(u, v)).leaf_count);
    if (worst_triangle_violation(metric) > 1e-7) return false;
    return !separation_oracle(n, metric).has_value();
}

double diameter_check(const MetricSolution& d) {
    int n = d.n;
    if (n < 2) return std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    std::vector<double> dist;
    for (int v = 0; v < n; ++v) {
        dist.clear();
        for (int u = 0; u < n; ++u)
            if (u != v) dist.push_back(d.at(u, v));
        std::sort(dist.begin(), dist.end());
        // Prefix of size k around v has max in-set distance dist[k-2]; any
        // other size-k set containing v only has a larger k-th distance.
        for (int k = 2; k <= n; ++k) {
            worst = std::min(worst, dist[k - 2] * 10.0 / static_cast<double>(k));
        }
    }
    return worst;
}

} // namespace hcbench
