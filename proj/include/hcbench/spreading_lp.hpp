#ifndef HCBENCH_SPREADING_LP_HPP
#define HCBENCH_SPREADING_LP_HPP

#include <optional>
#include <vector>

#include "hcbench/graph.hpp"
#include "hcbench/pairs.hpp"
#include "hcbench/tree.hpp"

namespace hcbench {

/// Symmetric pairwise metric with d(u,u) = 0, the output of the spreading LP.
struct MetricSolution {
    enum class Status { optimal, iteration_limit };

    int n = 0;
    std::vector<double> d; // pair_index order
    double objective = 0.0;
    Status status = Status::optimal;

    double at(int u, int v) const {
        if (u == v) return 0.0;
        return d[pair_index(n, u, v)];
    }
    double& slot(int u, int v) { return d[pair_index(n, u, v)]; }

    static MetricSolution zero(int n) {
        MetricSolution m;
        m.n = n;
        m.d.assign(pair_count(n), 0.0);
        return m;
    }
};

/// A violated spreading constraint: sum_{u in U} d(u,v) >= (|U|^2 - 1)/4 for
/// the distance-sorted prefix U around center v. slack < 0 means violated.
struct SpreadingViolation {
    int center = 0;
    std::vector<int> prefix; // U including the center, ascending vertex ids
    double slack = 0.0;
};

/// Most violated (center, prefix) pair, or nothing when all spreading
/// constraints hold up to 1e-9. Prefixes dominate arbitrary subsets of the
/// same size, so checking them suffices. Ties go to the smaller center, then
/// the shorter prefix.
std::optional<SpreadingViolation> separation_oracle(int n, const MetricSolution& d);

/// Worst triangle-inequality violation max(0, d_uv - d_uw - d_wv) over all
/// triples.
double worst_triangle_violation(const MetricSolution& d);

/// Minimizes sum_e w(e) d(e) over symmetric nonnegative metrics satisfying
/// every triangle inequality and every spreading constraint. Formulated
/// directly over pairwise variables: with all triangle inequalities present,
/// shortest-path distances under edge lengths l(e) = d(e) are >= d, so the
/// pairwise formulation and the edge-length formulation share their optimum.
/// Solved by constraint generation: triangle rows and the size-2 spreading
/// bounds d >= 3/4 up front, violated spreading prefixes added per round.
MetricSolution solve_spreading_lp(const Graph& g, int max_n = 30);

/// Tree-induced distances d(u,v) = |leaves(T[u v v])| form an ultrametric
/// that must satisfy every spreading constraint and triangle inequality;
/// false indicates a bug.
bool check_ultrametric_feasible(const Graph& g, const ClusterTree& tree);

/// min over centers v and prefix sizes k >= 2 of
/// (k-th smallest distance from v, counting d(v,v)=0) * 10 / k.
/// Feasible metrics always score >= 1.
double diameter_check(const MetricSolution& d);

} // namespace hcbench

#endif
